#pragma once

#include <span>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "toolplan/geom/shape.hpp"

namespace toolplan::geom {

/// Conservative buffer applied by collide_pair: any pair closer than this is
/// reported as colliding.
inline constexpr double kCollisionMargin = 1e-3;

/// World axis-aligned bounds of a posed shape (conservative for cylinders).
struct Aabb {
    Vec3 lo;
    Vec3 hi;
};
Aabb world_aabb(const Shape& shape, const RigidTransform& pose);

/// Boolean overlap test with an explicit margin. margin > 0 inflates the pair
/// by `margin` in total (conservative); margin < 0 shrinks it, so resting
/// contact up to |margin| deep does not count as a collision.
bool collide_pair_margin(const Shape& sa, const RigidTransform& pa, const Shape& sb,
                         const RigidTransform& pb, double margin);

/// Overlap test at the declared conservative margin (kCollisionMargin).
bool collide_pair(const Body& a, const Body& b);
bool collide_pair(const Shape& sa, const RigidTransform& pa, const Shape& sb,
                  const RigidTransform& pb);

/// Unordered name pair; used for collision ignore sets.
struct NamePair {
    std::string first;
    std::string second;

    NamePair(std::string a, std::string b) {
        if (b < a) std::swap(a, b);
        first = std::move(a);
        second = std::move(b);
    }
    bool operator==(const NamePair& o) const = default;
};

struct NamePairHash {
    std::size_t operator()(const NamePair& p) const {
        return std::hash<std::string>()(p.first) * 31 ^ std::hash<std::string>()(p.second);
    }
};

using IgnoreSet = std::unordered_set<NamePair, NamePairHash>;

/// True iff any non-ignored pair of bodies collides. Names must be unique.
bool collide_scene(std::span<const Body> bodies, const IgnoreSet& ignore = {});

/// Point containment with the exact shape (no margin); mainly useful for
/// sampling-based cross checks.
bool contains_point(const Shape& shape, const RigidTransform& pose, const Vec3& world_point);

} // namespace toolplan::geom
