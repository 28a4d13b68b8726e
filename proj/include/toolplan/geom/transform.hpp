#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>

namespace toolplan::geom {

using Vec3 = Eigen::Vector3d;
using Quat = Eigen::Quaterniond;
using Mat3 = Eigen::Matrix3d;
using Mat4 = Eigen::Matrix4d;

/// Rigid-body pose: translation plus a unit quaternion. The quaternion is
/// renormalized after every composition so long chains stay proper.
struct RigidTransform {
    Vec3 position{Vec3::Zero()};
    Quat rotation{Quat::Identity()};

    RigidTransform() = default;
    RigidTransform(const Vec3& p, const Quat& q) : position(p), rotation(q.normalized()) {}

    static RigidTransform identity() { return {}; }

    static RigidTransform translation(double x, double y, double z) {
        return {Vec3(x, y, z), Quat::Identity()};
    }
    static RigidTransform translation(const Vec3& p) { return {p, Quat::Identity()}; }

    static RigidTransform rotation_about(const Vec3& axis, double angle) {
        return {Vec3::Zero(), Quat(Eigen::AngleAxisd(angle, axis.normalized()))};
    }
    static RigidTransform rot_x(double angle) { return rotation_about(Vec3::UnitX(), angle); }
    static RigidTransform rot_y(double angle) { return rotation_about(Vec3::UnitY(), angle); }
    static RigidTransform rot_z(double angle) { return rotation_about(Vec3::UnitZ(), angle); }

    static RigidTransform from_matrix(const Mat4& m) {
        return {m.block<3, 1>(0, 3), Quat(Mat3(m.block<3, 3>(0, 0)))};
    }

    Mat4 matrix() const {
        Mat4 m = Mat4::Identity();
        m.block<3, 3>(0, 0) = rotation.toRotationMatrix();
        m.block<3, 1>(0, 3) = position;
        return m;
    }

    Vec3 apply(const Vec3& p) const { return rotation * p + position; }

    /// Direction transform: rotation only.
    Vec3 rotate(const Vec3& d) const { return rotation * d; }

    Vec3 x_axis() const { return rotation * Vec3::UnitX(); }
    Vec3 y_axis() const { return rotation * Vec3::UnitY(); }
    Vec3 z_axis() const { return rotation * Vec3::UnitZ(); }
};

/// Applies b then a: result maps b-local coordinates into a's parent frame.
inline RigidTransform compose(const RigidTransform& a, const RigidTransform& b) {
    RigidTransform out;
    out.position = a.rotation * b.position + a.position;
    out.rotation = (a.rotation * b.rotation).normalized();
    return out;
}

inline RigidTransform invert(const RigidTransform& t) {
    RigidTransform out;
    out.rotation = t.rotation.conjugate();
    out.position = -(out.rotation * t.position);
    return out;
}

/// Angle of the relative rotation between a and b, in [0, pi]. atan2 keeps
/// full precision for near-identical rotations where acos floors at ~1e-8.
inline double rotation_angle_between(const Quat& a, const Quat& b) {
    const Quat d = a.conjugate() * b;
    return 2.0 * std::atan2(d.vec().norm(), std::abs(d.w()));
}

/// Rotation vector (axis * angle) taking `from` to `to`.
inline Vec3 rotation_error(const Quat& to, const Quat& from) {
    Eigen::AngleAxisd aa(to * from.conjugate());
    return aa.axis() * aa.angle();
}

inline bool approx_equal(const RigidTransform& a, const RigidTransform& b,
                         double pos_tol = 1e-9, double rot_tol = 1e-9) {
    return (a.position - b.position).norm() <= pos_tol &&
           rotation_angle_between(a.rotation, b.rotation) <= rot_tol;
}

inline bool bitwise_equal(const RigidTransform& a, const RigidTransform& b) {
    return a.position == b.position && a.rotation.coeffs() == b.rotation.coeffs();
}

} // namespace toolplan::geom
