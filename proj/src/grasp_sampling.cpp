#include <cmath>

#include "toolplan/graspdb/graspdb.hpp"
#include "toolplan/util/errors.hpp"

namespace toolplan::graspdb {

namespace {

bool gripper_hits_tool(const ToolModel& tool, const RigidTransform& hand_pose, double jaw_width,
                       const robot::GripperGeom& gripper) {
    const auto jaw_bodies = gripper.bodies_at(hand_pose, jaw_width + gripper.clearance, "g/");
    const auto tool_bodies = tool.bodies_at(RigidTransform::identity(), "t/");
    for (const auto& g : jaw_bodies) {
        for (const auto& t : tool_bodies) {
            if (geom::collide_pair(g, t)) return true;
        }
    }
    return false;
}

} // namespace

std::vector<Grasp> sample_tool_grasps(const ToolModel& tool, double step, int spin_count,
                                      const robot::GripperGeom& gripper) {
    if (step <= 0.0 || spin_count < 1)
        throw ValidationError("grasp sampling step and spin count must be positive");
    if (tool.grasp_segments.empty())
        throw ValidationError("tool '" + tool.name + "' has no grasp segments");

    std::vector<Grasp> out;
    for (const GraspSegment& seg : tool.grasp_segments) {
        const Vec3 diff = seg.end - seg.start;
        const double length = diff.norm();
        const Vec3 s_hat = length > 1e-12 ? Vec3(diff / length) : Vec3::UnitZ();
        const Vec3 closing = seg.closing_axis.normalized();

        std::vector<double> stations;
        if (length < step) {
            stations.push_back(0.5 * length);
        } else {
            for (double t = 0.0; t <= length + 1e-12; t += step) stations.push_back(t);
        }

        // base hand frame: +Y along the closing axis, +Z (approach)
        // perpendicular to the handle
        geom::Mat3 base;
        base.col(0) = -s_hat;
        base.col(1) = closing;
        base.col(2) = closing.cross(s_hat);

        for (double t : stations) {
            const Vec3 p = seg.start + t * s_hat;
            for (int spin = 0; spin < spin_count; ++spin) {
                const double angle = 2.0 * M_PI * spin / spin_count;
                const geom::Mat3 spun =
                    Eigen::AngleAxisd(angle, closing).toRotationMatrix() * base;
                for (int flip = 0; flip < 2; ++flip) {
                    geom::Mat3 rot = spun;
                    if (flip) {
                        // swap fingers: half turn about the hand's own approach
                        rot = spun * Eigen::AngleAxisd(M_PI, Vec3::UnitZ()).toRotationMatrix();
                    }
                    Grasp g;
                    g.hand_pose = RigidTransform(p, geom::Quat(rot));
                    g.jaw_width = seg.grasp_width;
                    g.approach = g.hand_pose.z_axis();
                    if (!gripper_hits_tool(tool, g.hand_pose, g.jaw_width, gripper))
                        out.push_back(std::move(g));
                }
            }
        }
    }
    if (out.empty()) throw NoGrasps("every sampled grasp collides with tool '" + tool.name + "'");
    return out;
}

} // namespace toolplan::graspdb
