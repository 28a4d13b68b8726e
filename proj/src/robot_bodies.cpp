#include "toolplan/robot/kinematics.hpp"
#include "toolplan/robot/model.hpp"
#include "toolplan/util/errors.hpp"

namespace toolplan::robot {

std::vector<Body> arm_bodies(const DualArmModel& model, ArmId arm_id, const Vector6& q,
                             double jaw_width) {
    const ArmModel& arm = model.arm(arm_id);
    check_limits(arm, q);
    if (jaw_width < 0.0 || jaw_width > model.gripper_stroke)
        throw StrokeExceeded(std::string(arm_name(arm_id)) + " jaw width " +
                             std::to_string(jaw_width) + " exceeds stroke " +
                             std::to_string(model.gripper_stroke));

    const ArmFrames f = compute_frames(arm, q);
    const std::string prefix = std::string(arm_name(arm_id)) + "/";

    std::vector<Body> out;
    out.reserve(arm.link_capsules.size() + 2);
    for (std::size_t k = 0; k < arm.link_capsules.size(); ++k) {
        const LinkGeom& g = arm.link_capsules[k];
        out.push_back({prefix + "link" + std::to_string(k), g.shape,
                       geom::compose(f.joint_frames[g.frame], g.local_pose)});
    }
    auto jaws = model.gripper.bodies_at(f.tcp, jaw_width, prefix);
    out.push_back(std::move(jaws[1]));
    out.push_back(std::move(jaws[2]));
    return out;
}

std::vector<Body> robot_bodies(const DualArmModel& model, const DualConfig& c, double left_jaw,
                               double right_jaw) {
    std::vector<Body> out = model.torso_bodies;
    auto l = arm_bodies(model, ArmId::left, c.left, left_jaw);
    auto r = arm_bodies(model, ArmId::right, c.right, right_jaw);
    out.insert(out.end(), std::make_move_iterator(l.begin()), std::make_move_iterator(l.end()));
    out.insert(out.end(), std::make_move_iterator(r.begin()), std::make_move_iterator(r.end()));
    return out;
}

} // namespace toolplan::robot
