#include <algorithm>

#include "toolplan/graspdb/graspdb.hpp"
#include "toolplan/robot/kinematics.hpp"
#include "toolplan/util/errors.hpp"
#include "toolplan/util/rng.hpp"

namespace toolplan::graspdb {

namespace {

struct FeasibleGrasp {
    int grasp_index;
    Vector6 config;
    double manip;
};

// tool parts form one rigid body; their internal contacts are not collisions
geom::IgnoreSet with_tool_internal(geom::IgnoreSet ignore, const std::vector<Body>& tool_bodies) {
    for (std::size_t i = 0; i < tool_bodies.size(); ++i) {
        for (std::size_t j = i + 1; j < tool_bodies.size(); ++j) {
            ignore.insert(geom::NamePair(tool_bodies[i].name, tool_bodies[j].name));
        }
    }
    return ignore;
}

std::vector<FeasibleGrasp> feasible_for_arm(const robot::DualArmModel& model, ArmId arm,
                                            const ToolModel& tool,
                                            const std::vector<Grasp>& grasps,
                                            const RigidTransform& tool_pose,
                                            const std::vector<Body>& tool_bodies,
                                            const geom::IgnoreSet& ignore, std::uint64_t seed,
                                            int sample_index, const HandoverParams& params) {
    const robot::ArmModel& arm_model = model.arm(arm);
    const Vec3 shoulder = arm_model.base_pose.position + Vec3(0, 0, 0.15);

    std::vector<FeasibleGrasp> out;
    for (int gi = 0; gi < static_cast<int>(grasps.size()); ++gi) {
        if (static_cast<int>(out.size()) >= params.max_feasible_per_arm) break;
        const RigidTransform hand = geom::compose(tool_pose, grasps[gi].hand_pose);
        const double reach = (hand.position - shoulder).norm();
        if (reach > 0.73 || reach < 0.10) continue;

        Rng ik_rng(derive_seed(seed, static_cast<std::uint64_t>(sample_index) * 2 +
                                         (arm == ArmId::left ? 0 : 1),
                               static_cast<std::uint64_t>(gi)));
        const auto q =
            robot::inverse_kinematics(arm_model, hand, ik_rng, params.ik_restarts, model.home);
        if (!q) continue;

        std::vector<Body> scene = model.torso_bodies;
        auto arm_b = robot::arm_bodies(model, arm, *q,
                                       grasps[gi].jaw_width + model.gripper.clearance);
        scene.insert(scene.end(), arm_b.begin(), arm_b.end());
        scene.insert(scene.end(), tool_bodies.begin(), tool_bodies.end());
        if (geom::collide_scene(scene, ignore)) continue;

        out.push_back({gi, *q, robot::manipulability(arm_model, *q)});
    }
    return out;
}

bool arms_cross_collide(const robot::DualArmModel& model, const Vector6& ql, const Vector6& qr,
                        double jaw_l, double jaw_r) {
    const auto left = robot::arm_bodies(model, ArmId::left, ql, jaw_l);
    const auto right = robot::arm_bodies(model, ArmId::right, qr, jaw_r);
    for (const auto& a : left) {
        for (const auto& b : right) {
            if (geom::collide_pair(a, b)) return true;
        }
    }
    return false;
}

} // namespace

std::vector<HandoverPair> compute_handover_pairs(const robot::DualArmModel& model,
                                                 const ToolModel& tool,
                                                 const std::vector<Grasp>& grasps,
                                                 int region_samples, std::uint64_t seed,
                                                 HandoverParams params) {
    if (grasps.empty()) throw ValidationError("handover sampling needs a nonempty grasp set");
    params.region_samples = region_samples;

    const Vec3 mid = 0.5 * (model.left.base_pose.position + model.right.base_pose.position);
    const Vec3 center(mid.x(), mid.y(), model.torso_height);
    const geom::IgnoreSet base_ignore = robot::default_ignore_pairs(model);

    std::vector<HandoverPair> all;
    for (int s = 0; s < params.region_samples; ++s) {
        Rng rng(derive_seed(seed, 0x9a7d, static_cast<std::uint64_t>(s)));
        Vec3 pos;
        for (int i = 0; i < 3; ++i)
            pos[i] = center[i] + uniform(rng, -0.5 * params.region_extents[i],
                                         0.5 * params.region_extents[i]);

        // alternate between an upright tool and one tipped on its side, with
        // a free yaw and a small jitter
        const double yaw = uniform(rng, 0, 2 * M_PI);
        geom::Quat base = geom::Quat(Eigen::AngleAxisd(yaw, Vec3::UnitZ()));
        if (s % 2 == 0)
            base = base * geom::Quat(Eigen::AngleAxisd(M_PI / 2, Vec3::UnitY()));
        Vec3 axis(uniform(rng, -1, 1), uniform(rng, -1, 1), uniform(rng, -1, 1));
        if (axis.norm() < 1e-9) axis = Vec3::UnitX();
        const double jitter = uniform(rng, 0, params.orientation_jitter);
        const geom::Quat rot =
            (geom::Quat(Eigen::AngleAxisd(jitter, axis.normalized())) * base).normalized();
        const RigidTransform tool_pose(pos, rot);

        const auto tool_bodies = tool.bodies_at(tool_pose, "tool/");
        const geom::IgnoreSet ignore = with_tool_internal(base_ignore, tool_bodies);
        const auto left = feasible_for_arm(model, ArmId::left, tool, grasps, tool_pose,
                                           tool_bodies, ignore, seed, s, params);
        if (left.empty()) continue;
        const auto right = feasible_for_arm(model, ArmId::right, tool, grasps, tool_pose,
                                            tool_bodies, ignore, seed, s, params);
        if (right.empty()) continue;

        std::vector<HandoverPair> sample_pairs;
        for (const auto& l : left) {
            for (const auto& r : right) {
                if (l.grasp_index == r.grasp_index) continue;
                const double separation = (grasps[l.grasp_index].hand_pose.position -
                                           grasps[r.grasp_index].hand_pose.position)
                                              .norm();
                if (separation < 0.03) continue; // grasps overlap on the handle
                if (arms_cross_collide(model, l.config, r.config,
                                       grasps[l.grasp_index].jaw_width + model.gripper.clearance,
                                       grasps[r.grasp_index].jaw_width + model.gripper.clearance))
                    continue;

                HandoverPair pair;
                pair.giver = {ArmId::left, l.grasp_index, grasps[l.grasp_index], l.config};
                pair.receiver = {ArmId::right, r.grasp_index, grasps[r.grasp_index], r.config};
                pair.tool_pose = tool_pose;
                pair.score = std::min(l.manip, r.manip);
                sample_pairs.push_back(std::move(pair));
            }
        }
        std::stable_sort(sample_pairs.begin(), sample_pairs.end(),
                         [](const HandoverPair& a, const HandoverPair& b) {
                             return a.score > b.score;
                         });
        if (static_cast<int>(sample_pairs.size()) > params.max_pairs_per_sample)
            sample_pairs.resize(params.max_pairs_per_sample);
        all.insert(all.end(), sample_pairs.begin(), sample_pairs.end());
    }

    if (all.empty()) throw NoPairs("no feasible handover pair in the sampled region");
    std::stable_sort(all.begin(), all.end(),
                     [](const HandoverPair& a, const HandoverPair& b) { return a.score > b.score; });
    return all;
}

} // namespace toolplan::graspdb
