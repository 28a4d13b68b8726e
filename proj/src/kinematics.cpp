#include "toolplan/robot/kinematics.hpp"

#include <Eigen/Dense>

#include "toolplan/util/errors.hpp"

namespace toolplan::robot {

ArmFrames compute_frames(const ArmModel& arm, const Vector6& q) {
    ArmFrames out;
    out.joint_frames[0] = arm.base_pose;
    RigidTransform cur = arm.base_pose;
    for (int i = 0; i < 6; ++i) {
        const RigidTransform pre = geom::compose(cur, arm.joints[i].offset);
        out.axis_world[i] = pre.rotate(arm.joints[i].axis);
        out.origin_world[i] = pre.position;
        cur = geom::compose(pre, RigidTransform::rotation_about(arm.joints[i].axis, q[i]));
        out.joint_frames[i + 1] = cur;
    }
    out.tcp = geom::compose(cur, arm.tcp_offset);
    return out;
}

RigidTransform forward_kinematics(const ArmModel& arm, const Vector6& q) {
    check_limits(arm, q);
    return compute_frames(arm, q).tcp;
}

Matrix6 jacobian(const ArmModel& arm, const Vector6& q) {
    check_limits(arm, q);
    const ArmFrames f = compute_frames(arm, q);
    Matrix6 j;
    for (int i = 0; i < 6; ++i) {
        const Vec3 z = f.axis_world[i];
        const Vec3 r = f.tcp.position - f.origin_world[i];
        j.block<3, 1>(0, i) = z.cross(r);
        j.block<3, 1>(3, i) = z;
    }
    return j;
}

double manipulability(const ArmModel& arm, const Vector6& q) {
    const Matrix6 j = jacobian(arm, q);
    const double det = (j * j.transpose()).determinant();
    return det > 0.0 ? std::sqrt(det) : 0.0;
}

namespace {

std::optional<Vector6> descend(const ArmModel& arm, const RigidTransform& target, Vector6 q,
                               const IkParams& p) {
    for (int iter = 0; iter < p.max_iterations; ++iter) {
        const ArmFrames f = compute_frames(arm, q);
        const Vec3 e_pos = target.position - f.tcp.position;
        const Vec3 e_rot = geom::rotation_error(target.rotation, f.tcp.rotation);
        if (e_pos.norm() < p.pos_tolerance && e_rot.norm() < p.ang_tolerance) return q;

        Matrix6 j;
        for (int i = 0; i < 6; ++i) {
            const Vec3 z = f.axis_world[i];
            j.block<3, 1>(0, i) = z.cross(f.tcp.position - f.origin_world[i]);
            j.block<3, 1>(3, i) = z;
        }
        Vector6 e;
        e << e_pos, e_rot;
        const Matrix6 a = j * j.transpose() + (p.damping * p.damping) * Matrix6::Identity();
        Vector6 dq = j.transpose() * a.ldlt().solve(e);
        const double biggest = dq.cwiseAbs().maxCoeff();
        if (biggest > p.step_clamp) dq *= p.step_clamp / biggest;
        q = clamp_to_limits(arm, q + dq);
    }
    return std::nullopt;
}

} // namespace

std::optional<Vector6> inverse_kinematics(const ArmModel& arm, const RigidTransform& target,
                                          Rng& rng, int restarts,
                                          const std::optional<Vector6>& hint,
                                          const IkParams& params) {
    for (int attempt = 0; attempt < std::max(restarts, 1); ++attempt) {
        Vector6 seed;
        if (attempt == 0) {
            seed = hint ? clamp_to_limits(arm, *hint) : Vector6::Zero();
        } else {
            for (int i = 0; i < 6; ++i)
                seed[i] = uniform(rng, arm.joints[i].lower, arm.joints[i].upper);
        }
        if (auto q = descend(arm, target, seed, params)) {
            if (within_limits(arm, *q)) return q;
        }
    }
    return std::nullopt;
}

} // namespace toolplan::robot
