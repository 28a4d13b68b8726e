#include "toolplan/geom/collide.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace toolplan::geom {
namespace {

// Support point of a shape in its local frame.
Vec3 support_local(const Shape& shape, const Vec3& d) {
    return std::visit(
        [&](const auto& v) -> Vec3 {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Box>) {
                return Vec3(d.x() >= 0 ? v.half_extents.x() : -v.half_extents.x(),
                            d.y() >= 0 ? v.half_extents.y() : -v.half_extents.y(),
                            d.z() >= 0 ? v.half_extents.z() : -v.half_extents.z());
            } else if constexpr (std::is_same_v<T, Cylinder>) {
                const double rxy = std::hypot(d.x(), d.y());
                Vec3 p(0, 0, d.z() >= 0 ? 0.5 * v.height : -0.5 * v.height);
                if (rxy > 1e-12) {
                    p.x() = v.radius * d.x() / rxy;
                    p.y() = v.radius * d.y() / rxy;
                }
                return p;
            } else {
                Vec3 p(0, 0, d.z() >= 0 ? 0.5 * v.length : -0.5 * v.length);
                const double n = d.norm();
                if (n > 1e-12) p += v.radius * d / n;
                return p;
            }
        },
        shape);
}

struct SupportBody {
    const Shape* shape;
    RigidTransform pose;
    double inflate; // >= 0, Minkowski sum with a ball

    Vec3 support(const Vec3& world_dir) const {
        const Vec3 local_dir = pose.rotation.conjugate() * world_dir;
        Vec3 p = pose.apply(support_local(*shape, local_dir));
        const double n = world_dir.norm();
        if (inflate > 0.0 && n > 1e-12) p += inflate * world_dir / n;
        return p;
    }
};

Vec3 minkowski_support(const SupportBody& a, const SupportBody& b, const Vec3& d) {
    return a.support(d) - b.support(-d);
}

// Simplex handling for boolean GJK. Updates the simplex (keeping only the
// points that can contain the origin) and the next search direction. Returns
// true when the simplex encloses the origin.
bool do_simplex(std::array<Vec3, 4>& s, int& n, Vec3& dir) {
    const auto same_dir = [](const Vec3& a, const Vec3& b) { return a.dot(b) > 0.0; };

    if (n == 2) { // line [B=s0 old, A=s1 new]
        const Vec3 a = s[1], b = s[0];
        const Vec3 ab = b - a, ao = -a;
        if (same_dir(ab, ao)) {
            dir = ab.cross(ao).cross(ab);
        } else {
            s[0] = a;
            n = 1;
            dir = ao;
        }
        return false;
    }
    if (n == 3) { // triangle [C=s0, B=s1, A=s2 new]
        const Vec3 a = s[2], b = s[1], c = s[0];
        const Vec3 ab = b - a, ac = c - a, ao = -a;
        const Vec3 abc = ab.cross(ac);
        if (same_dir(abc.cross(ac), ao)) {
            if (same_dir(ac, ao)) {
                s[0] = c;
                s[1] = a;
                n = 2;
                dir = ac.cross(ao).cross(ac);
            } else {
                s[0] = b;
                s[1] = a;
                n = 2;
                dir = ab.cross(ao).cross(ab);
                if (!same_dir(ab, ao)) {
                    s[0] = a;
                    n = 1;
                    dir = ao;
                }
            }
        } else if (same_dir(ab.cross(abc), ao)) {
            s[0] = b;
            s[1] = a;
            n = 2;
            dir = ab.cross(ao).cross(ab);
            if (!same_dir(ab, ao)) {
                s[0] = a;
                n = 1;
                dir = ao;
            }
        } else if (same_dir(abc, ao)) {
            dir = abc;
        } else {
            s[0] = b; // reverse winding so the face normal points at the origin
            s[1] = c;
            s[2] = a;
            dir = -abc;
        }
        return false;
    }
    // tetrahedron [D=s0, C=s1, B=s2, A=s3 new]
    const Vec3 a = s[3], b = s[2], c = s[1], d = s[0];
    const Vec3 ao = -a;
    const Vec3 abc = (b - a).cross(c - a);
    const Vec3 acd = (c - a).cross(d - a);
    const Vec3 adb = (d - a).cross(b - a);
    if (same_dir(abc, ao)) {
        s[0] = c;
        s[1] = b;
        s[2] = a;
        n = 3;
        dir = abc;
        return do_simplex(s, n, dir);
    }
    if (same_dir(acd, ao)) {
        s[0] = d;
        s[1] = c;
        s[2] = a;
        n = 3;
        dir = acd;
        return do_simplex(s, n, dir);
    }
    if (same_dir(adb, ao)) {
        s[0] = b;
        s[1] = d;
        s[2] = a;
        n = 3;
        dir = adb;
        return do_simplex(s, n, dir);
    }
    return true;
}

// Boolean GJK on two support bodies.
bool gjk_overlap(const SupportBody& a, const SupportBody& b) {
    Vec3 dir = b.pose.position - a.pose.position;
    if (dir.squaredNorm() < 1e-18) dir = Vec3::UnitX();

    std::array<Vec3, 4> simplex;
    simplex[0] = minkowski_support(a, b, dir);
    int n = 1;
    if (simplex[0].dot(dir) < 0.0) return false;
    dir = -simplex[0];

    for (int iter = 0; iter < 96; ++iter) {
        if (dir.squaredNorm() < 1e-20) return true; // origin on the simplex
        const Vec3 p = minkowski_support(a, b, dir);
        if (p.dot(dir) < 0.0) return false;
        simplex[n++] = p;
        if (do_simplex(simplex, n, dir)) return true;
    }
    return true; // non-convergence: report overlap, erring conservative
}

Shape shrink_shape(const Shape& shape, double amount) {
    constexpr double kMin = 1e-6;
    return std::visit(
        [&](const auto& v) -> Shape {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Box>) {
                return Box{(v.half_extents.array() - amount).max(kMin).matrix()};
            } else if constexpr (std::is_same_v<T, Cylinder>) {
                return Cylinder{std::max(kMin, v.radius - amount),
                                std::max(kMin, v.height - 2.0 * amount)};
            } else {
                return Capsule{std::max(kMin, v.radius - amount), v.length};
            }
        },
        shape);
}

} // namespace

Aabb world_aabb(const Shape& shape, const RigidTransform& pose) {
    return std::visit(
        [&](const auto& v) -> Aabb {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Box>) {
                const Mat3 r = pose.rotation.toRotationMatrix();
                const Vec3 ext = r.cwiseAbs() * v.half_extents;
                return {pose.position - ext, pose.position + ext};
            } else {
                // cylinder bounded by its capsule hull; exactness is not needed here
                double half_len = 0.0, radius = 0.0;
                if constexpr (std::is_same_v<T, Cylinder>) {
                    half_len = 0.5 * v.height;
                    radius = v.radius;
                } else {
                    half_len = 0.5 * v.length;
                    radius = v.radius;
                }
                const Vec3 axis = pose.z_axis() * half_len;
                const Vec3 ext = axis.cwiseAbs() + Vec3::Constant(radius);
                return {pose.position - ext, pose.position + ext};
            }
        },
        shape);
}

bool collide_pair_margin(const Shape& sa, const RigidTransform& pa, const Shape& sb,
                         const RigidTransform& pb, double margin) {
    // Broad phase: conservative AABB check at the requested margin.
    const Aabb ba = world_aabb(sa, pa);
    const Aabb bb = world_aabb(sb, pb);
    const double slack = std::max(margin, 0.0) + 1e-9;
    for (int i = 0; i < 3; ++i) {
        if (ba.lo[i] > bb.hi[i] + slack || bb.lo[i] > ba.hi[i] + slack) return false;
    }

    if (margin >= 0.0) {
        const SupportBody a{&sa, pa, 0.5 * margin};
        const SupportBody b{&sb, pb, 0.5 * margin};
        return gjk_overlap(a, b);
    }
    const Shape shrunk_a = shrink_shape(sa, -0.5 * margin);
    const Shape shrunk_b = shrink_shape(sb, -0.5 * margin);
    const SupportBody a{&shrunk_a, pa, 0.0};
    const SupportBody b{&shrunk_b, pb, 0.0};
    return gjk_overlap(a, b);
}

bool collide_pair(const Shape& sa, const RigidTransform& pa, const Shape& sb,
                  const RigidTransform& pb) {
    return collide_pair_margin(sa, pa, sb, pb, kCollisionMargin);
}

bool collide_pair(const Body& a, const Body& b) {
    return collide_pair(a.shape, a.pose, b.shape, b.pose);
}

bool collide_scene(std::span<const Body> bodies, const IgnoreSet& ignore) {
    std::unordered_set<std::string> names;
    for (const auto& b : bodies) {
        if (!names.insert(b.name).second)
            throw ValidationError("duplicate body name in scene: " + b.name);
    }
    for (std::size_t i = 0; i < bodies.size(); ++i) {
        for (std::size_t j = i + 1; j < bodies.size(); ++j) {
            if (ignore.contains(NamePair(bodies[i].name, bodies[j].name))) continue;
            if (collide_pair(bodies[i], bodies[j])) return true;
        }
    }
    return false;
}

bool contains_point(const Shape& shape, const RigidTransform& pose, const Vec3& world_point) {
    const Vec3 p = invert(pose).apply(world_point);
    return std::visit(
        [&](const auto& v) -> bool {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Box>) {
                return (p.cwiseAbs().array() <= v.half_extents.array()).all();
            } else if constexpr (std::is_same_v<T, Cylinder>) {
                return std::abs(p.z()) <= 0.5 * v.height &&
                       p.head<2>().norm() <= v.radius;
            } else {
                const double z = std::clamp(p.z(), -0.5 * v.length, 0.5 * v.length);
                return (p - Vec3(0, 0, z)).norm() <= v.radius;
            }
        },
        shape);
}

} // namespace toolplan::geom
