#pragma once

#include <optional>

#include "toolplan/robot/model.hpp"
#include "toolplan/util/rng.hpp"

namespace toolplan::robot {

/// All intermediate frames of one arm at configuration q. joint_frames[k] is
/// the frame after joint k-1 (joint_frames[0] is the base), axes/origins are
/// the world joint axes and origins used by the Jacobian.
struct ArmFrames {
    std::array<RigidTransform, 7> joint_frames;
    RigidTransform tcp;
    std::array<Vec3, 6> axis_world;
    std::array<Vec3, 6> origin_world;
};

/// Frame chain without limit checking (internal workhorse).
ArmFrames compute_frames(const ArmModel& arm, const Vector6& q);

/// Tool-center-point pose. Throws LimitViolation outside joint limits.
RigidTransform forward_kinematics(const ArmModel& arm, const Vector6& q);

/// Geometric Jacobian (linear on top, angular below). Throws LimitViolation.
Matrix6 jacobian(const ArmModel& arm, const Vector6& q);

/// Yoshikawa measure sqrt(det(J*J^T)), clamped at zero.
double manipulability(const ArmModel& arm, const Vector6& q);

struct IkParams {
    double damping = 1e-2;
    double step_clamp = 0.2;       // radians, infinity norm
    int max_iterations = 200;      // per restart
    double pos_tolerance = 1e-4;   // meters
    double ang_tolerance = 1e-3;   // radians
};

/// Damped-least-squares IK with random restarts. The first attempt starts
/// from `hint` when provided (zero otherwise); the remaining `restarts - 1`
/// start from uniform samples inside the limits. Deterministic for a fixed
/// rng state.
std::optional<Vector6> inverse_kinematics(const ArmModel& arm, const RigidTransform& target,
                                          Rng& rng, int restarts = 8,
                                          const std::optional<Vector6>& hint = std::nullopt,
                                          const IkParams& params = {});

} // namespace toolplan::robot
