#pragma once

#include <string>
#include <variant>

#include "toolplan/geom/transform.hpp"
#include "toolplan/util/errors.hpp"

namespace toolplan::geom {

struct Box {
    Vec3 half_extents; // all > 0
};

struct Cylinder {
    double radius; // > 0
    double height; // > 0, axis is local +Z
};

struct Capsule {
    double radius; // > 0
    double length; // > 0, segment length excluding caps, axis is local +Z
};

using Shape = std::variant<Box, Cylinder, Capsule>;

inline Shape make_box(double hx, double hy, double hz) { return Box{Vec3(hx, hy, hz)}; }
inline Shape make_cylinder(double radius, double height) { return Cylinder{radius, height}; }
inline Shape make_capsule(double radius, double length) { return Capsule{radius, length}; }

inline void check_shape(const Shape& s) {
    std::visit(
        [](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Box>) {
                if (!(v.half_extents.array() > 0.0).all())
                    throw ValidationError("box half-extents must be positive");
            } else if constexpr (std::is_same_v<T, Cylinder>) {
                if (v.radius <= 0.0 || v.height <= 0.0)
                    throw ValidationError("cylinder dimensions must be positive");
            } else {
                if (v.radius <= 0.0 || v.length <= 0.0)
                    throw ValidationError("capsule dimensions must be positive");
            }
        },
        s);
}

/// Radius of the smallest origin-centered sphere containing the shape.
inline double bounding_radius(const Shape& s) {
    return std::visit(
        [](const auto& v) -> double {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Box>) {
                return v.half_extents.norm();
            } else if constexpr (std::is_same_v<T, Cylinder>) {
                return std::hypot(v.radius, 0.5 * v.height);
            } else {
                return 0.5 * v.length + v.radius;
            }
        },
        s);
}

/// A named, world-posed shape.
struct Body {
    std::string name;
    Shape shape;
    RigidTransform pose;
};

} // namespace toolplan::geom
