#pragma once

#include <array>
#include <string>
#include <vector>

#include "toolplan/geom/collide.hpp"
#include "toolplan/geom/shape.hpp"

namespace toolplan::robot {

using geom::Body;
using geom::RigidTransform;
using geom::Shape;
using geom::Vec3;
using Vector6 = Eigen::Matrix<double, 6, 1>;
using Matrix6 = Eigen::Matrix<double, 6, 6>;

enum class ArmId { left, right };

inline const char* arm_name(ArmId a) { return a == ArmId::left ? "left" : "right"; }
inline ArmId other_arm(ArmId a) { return a == ArmId::left ? ArmId::right : ArmId::left; }

/// One revolute joint: fixed link offset applied before the rotation, axis in
/// the post-offset frame, and position limits.
struct JointDesc {
    RigidTransform offset;
    Vec3 axis{Vec3::UnitZ()};
    double lower = 0.0;
    double upper = 0.0;
};

/// Collision geometry attached to a joint frame (frame 0 is the arm base,
/// frame k the frame after joint k).
struct LinkGeom {
    int frame = 0;
    Shape shape;
    RigidTransform local_pose;
};

struct ArmModel {
    std::string name;
    RigidTransform base_pose;
    std::array<JointDesc, 6> joints;
    RigidTransform tcp_offset;
    std::vector<LinkGeom> link_capsules;
};

/// Parallel-jaw gripper proxy dimensions, expressed in the TCP frame whose
/// origin is the grasp center and whose +Z is the approach direction.
struct GripperGeom {
    Vec3 palm_half{0.040, 0.045, 0.028};
    double palm_center_z = -0.070;
    Vec3 finger_half{0.006, 0.005, 0.026};
    double finger_center_z = -0.012;
    double finger_gap_pad = 0.005; // finger box center sits at jaw/2 + this
    double clearance = 0.004;      // extra opening used for collision models

    /// Palm plus two fingers, posed at a world TCP pose with the given jaw
    /// opening. Names are `<prefix>palm`, `<prefix>finger0`, `<prefix>finger1`.
    std::vector<Body> bodies_at(const RigidTransform& tcp_world, double jaw_width,
                                const std::string& prefix) const;
};

struct JointConfig {
    ArmId arm = ArmId::left;
    Vector6 angles{Vector6::Zero()};
};

struct DualConfig {
    Vector6 left{Vector6::Zero()};
    Vector6 right{Vector6::Zero()};

    const Vector6& of(ArmId a) const { return a == ArmId::left ? left : right; }
    Vector6& of(ArmId a) { return a == ArmId::left ? left : right; }
};

struct DualArmModel {
    std::string name;
    ArmModel left;
    ArmModel right;
    double gripper_stroke = 0.085;
    GripperGeom gripper;
    std::vector<Body> torso_bodies; // world-posed, named "torso/..."
    double torso_height = 0.60;    // z of the handover region center
    Vector6 home{Vector6::Zero()};

    const ArmModel& arm(ArmId a) const { return a == ArmId::left ? left : right; }
};

/// The dual-arm model shipped with the repo: two mirrored 6-DOF arms with
/// ~0.86 m reach, bases 0.5 m apart on a shared torso.
DualArmModel default_dual_arm();

/// Throws LimitViolation when any joint is outside its interval.
void check_limits(const ArmModel& arm, const Vector6& q);
bool within_limits(const ArmModel& arm, const Vector6& q);
Vector6 clamp_to_limits(const ArmModel& arm, const Vector6& q);

/// World-posed collision bodies for torso, links and jaws of both arms.
std::vector<Body> robot_bodies(const DualArmModel& model, const DualConfig& c,
                               double left_jaw, double right_jaw);

/// Bodies of a single arm (links, palm, fingers) at configuration q.
std::vector<Body> arm_bodies(const DualArmModel& model, ArmId arm, const Vector6& q,
                             double jaw_width);

/// Name pairs that are always in contact or permanently adjacent and must be
/// excluded from self-collision checks.
geom::IgnoreSet default_ignore_pairs(const DualArmModel& model);

} // namespace toolplan::robot
