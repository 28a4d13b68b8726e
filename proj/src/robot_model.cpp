#include "toolplan/robot/model.hpp"

#include "toolplan/util/errors.hpp"

namespace toolplan::robot {

namespace {

ArmModel make_default_arm(const std::string& name, double base_y) {
    ArmModel arm;
    arm.name = name;
    arm.base_pose = RigidTransform::translation(0.0, base_y, 0.45);

    const Vec3 y = Vec3::UnitY();
    const Vec3 z = Vec3::UnitZ();
    arm.joints[0] = {RigidTransform::translation(0, 0, 0.10), z, -2.9, 2.9};
    arm.joints[1] = {RigidTransform::translation(0, 0, 0.05), y, -2.3, 2.3};
    arm.joints[2] = {RigidTransform::translation(0, 0, 0.28), y, -2.6, 2.6};
    arm.joints[3] = {RigidTransform::translation(0, 0, 0.22), y, -2.9, 2.9};
    arm.joints[4] = {RigidTransform::translation(0, 0, 0.05), z, -2.9, 2.9};
    arm.joints[5] = {RigidTransform::translation(0, 0, 0.05), y, -2.9, 2.9};
    arm.tcp_offset = RigidTransform::translation(0, 0, 0.11);

    arm.link_capsules = {
        {0, geom::make_capsule(0.050, 0.10), RigidTransform::translation(0, 0, 0.050)},
        {1, geom::make_capsule(0.048, 0.05), RigidTransform::translation(0, 0, 0.025)},
        {2, geom::make_capsule(0.040, 0.24), RigidTransform::translation(0, 0, 0.140)},
        {3, geom::make_capsule(0.035, 0.18), RigidTransform::translation(0, 0, 0.110)},
        {4, geom::make_capsule(0.032, 0.05), RigidTransform::translation(0, 0, 0.025)},
        {5, geom::make_capsule(0.030, 0.05), RigidTransform::translation(0, 0, 0.025)},
        {6, geom::make_box(0.040, 0.045, 0.028), RigidTransform::translation(0, 0, 0.040)},
    };
    return arm;
}

} // namespace

std::vector<Body> GripperGeom::bodies_at(const RigidTransform& tcp_world, double jaw_width,
                                         const std::string& prefix) const {
    std::vector<Body> out;
    out.reserve(3);
    out.push_back({prefix + "palm", geom::Box{palm_half},
                   geom::compose(tcp_world, RigidTransform::translation(0, 0, palm_center_z))});
    const double fy = 0.5 * jaw_width + finger_gap_pad;
    out.push_back({prefix + "finger0", geom::Box{finger_half},
                   geom::compose(tcp_world, RigidTransform::translation(0, fy, finger_center_z))});
    out.push_back({prefix + "finger1", geom::Box{finger_half},
                   geom::compose(tcp_world,
                                 RigidTransform::translation(0, -fy, finger_center_z))});
    return out;
}

DualArmModel default_dual_arm() {
    DualArmModel model;
    model.name = "dual_arm_v1";
    model.left = make_default_arm("left", 0.25);
    model.right = make_default_arm("right", -0.25);
    model.gripper_stroke = 0.085;
    model.torso_height = 0.60;
    model.torso_bodies = {
        {"torso/column", geom::make_box(0.06, 0.22, 0.42),
         RigidTransform::translation(-0.28, 0, 0.42)},
        {"torso/crossbar", geom::make_box(0.12, 0.30, 0.05),
         RigidTransform::translation(-0.12, 0, 0.45)},
    };
    model.home << 0.0, 0.9, 1.2, -0.8, 0.0, 0.0;
    return model;
}

void check_limits(const ArmModel& arm, const Vector6& q) {
    for (int i = 0; i < 6; ++i) {
        if (q[i] < arm.joints[i].lower - 1e-12 || q[i] > arm.joints[i].upper + 1e-12) {
            throw LimitViolation(arm.name + " joint " + std::to_string(i) + " = " +
                                 std::to_string(q[i]) + " outside [" +
                                 std::to_string(arm.joints[i].lower) + ", " +
                                 std::to_string(arm.joints[i].upper) + "]");
        }
    }
}

bool within_limits(const ArmModel& arm, const Vector6& q) {
    for (int i = 0; i < 6; ++i) {
        if (q[i] < arm.joints[i].lower - 1e-12 || q[i] > arm.joints[i].upper + 1e-12)
            return false;
    }
    return true;
}

Vector6 clamp_to_limits(const ArmModel& arm, const Vector6& q) {
    Vector6 out = q;
    for (int i = 0; i < 6; ++i) {
        out[i] = std::clamp(out[i], arm.joints[i].lower, arm.joints[i].upper);
    }
    return out;
}

geom::IgnoreSet default_ignore_pairs(const DualArmModel& model) {
    geom::IgnoreSet ignore;
    ignore.insert(geom::NamePair("torso/column", "torso/crossbar"));
    for (const char* arm : {"left", "right"}) {
        const std::string p = std::string(arm) + "/";
        for (int i = 0; i + 1 <= 6; ++i) {
            ignore.insert(geom::NamePair(p + "link" + std::to_string(i),
                                         p + "link" + std::to_string(i + 1)));
        }
        // shoulder and wrist clusters overlap by construction
        ignore.insert(geom::NamePair(p + "link0", p + "link2"));
        ignore.insert(geom::NamePair(p + "link3", p + "link5"));
        ignore.insert(geom::NamePair(p + "link4", p + "link6"));
        ignore.insert(geom::NamePair(p + "link6", p + "finger0"));
        ignore.insert(geom::NamePair(p + "link6", p + "finger1"));
        ignore.insert(geom::NamePair(p + "finger0", p + "finger1"));
        // shoulder geometry straddles the mounting crossbar
        ignore.insert(geom::NamePair("torso/crossbar", p + "link0"));
        ignore.insert(geom::NamePair("torso/crossbar", p + "link1"));
    }
    (void)model;
    return ignore;
}

} // namespace toolplan::robot
