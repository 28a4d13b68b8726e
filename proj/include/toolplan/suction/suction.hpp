#pragma once

#include <vector>

#include "toolplan/geom/shape.hpp"

namespace toolplan::suction {

using geom::RigidTransform;
using geom::Shape;
using geom::Vec3;

/// A planar facet of an object model, in the object frame. The polygon is
/// convex and wound counter-clockwise around the outward normal; u/v span the
/// facet plane and (u, v, normal) is right-handed.
struct Facet {
    Vec3 normal;
    Vec3 u;
    Vec3 v;
    std::vector<Vec3> polygon;
    Vec3 centroid;
};

struct FacetSet {
    std::vector<Facet> facets;
};

/// Planar facets of a primitive: 6 for boxes, 2 polygonized disks for
/// cylinders. Capsules have none and raise UnsupportedShape.
FacetSet extract_facets(const Shape& shape);

/// One candidate attachment of the suction tool: the pose of the tool frame
/// expressed in the object frame. The tool convention is -Z approach with the
/// origin at the pad center, so the tool +Z equals the facet outward normal.
struct SuctionPose {
    RigidTransform tool_in_object;
    int facet_index = 0;
    Vec3 contact_point{Vec3::Zero()};
    double center_distance = 0.0; // rank key: contact-to-centroid distance
};

struct SuctionParams {
    double pad_radius = 0.015;
    double grid_step = 0.02;
    double margin = 0.005;
    int spin_count = 8;
};

/// Grid-samples every facet, keeps contacts whose pad disk (grown by margin)
/// fits inside the facet, expands each by spin_count rotations about the
/// normal, and ranks the result centroid-first. Throws NoPoses when no facet
/// admits the pad.
std::vector<SuctionPose> sample_poses(const FacetSet& facets, const SuctionParams& params);

/// Facets whose outward normal points up in the world at the given object
/// pose (dot with +Z above min_dot).
FacetSet filter_upward(const FacetSet& facets, const RigidTransform& object_pose,
                       double min_dot = 0.9);

/// World pose of the tool when attached at the suction pose.
RigidTransform tool_pose_on_object(const RigidTransform& object_pose, const SuctionPose& pose);

} // namespace toolplan::suction
