#include "toolplan/suction/suction.hpp"

#include <algorithm>
#include <cmath>

#include "toolplan/util/errors.hpp"

namespace toolplan::suction {

namespace {

Facet make_facet(const Vec3& normal, const Vec3& u, const std::vector<Vec3>& polygon) {
    Facet f;
    f.normal = normal.normalized();
    f.u = u.normalized();
    f.v = f.normal.cross(f.u);
    f.polygon = polygon;
    f.centroid = Vec3::Zero();
    for (const auto& p : polygon) f.centroid += p;
    f.centroid /= static_cast<double>(polygon.size());
    return f;
}

// Rectangle facet centered at c with half extents (hu, hv) along (u, v).
Facet rect_facet(const Vec3& c, const Vec3& n, const Vec3& u, double hu, double hv) {
    const Vec3 un = u.normalized();
    const Vec3 vn = n.normalized().cross(un);
    return make_facet(n, un,
                      {c - hu * un - hv * vn, c + hu * un - hv * vn, c + hu * un + hv * vn,
                       c - hu * un + hv * vn});
}

Facet disk_facet(const Vec3& c, const Vec3& n, const Vec3& u, double radius, int sides) {
    const Vec3 un = u.normalized();
    const Vec3 vn = n.normalized().cross(un);
    std::vector<Vec3> poly;
    poly.reserve(sides);
    for (int i = 0; i < sides; ++i) {
        const double a = 2.0 * M_PI * i / sides;
        poly.push_back(c + radius * (std::cos(a) * un + std::sin(a) * vn));
    }
    return make_facet(n, un, poly);
}

} // namespace

FacetSet extract_facets(const Shape& shape) {
    geom::check_shape(shape);
    if (const auto* box = std::get_if<geom::Box>(&shape)) {
        const Vec3 h = box->half_extents;
        FacetSet out;
        out.facets = {
            rect_facet({h.x(), 0, 0}, Vec3::UnitX(), Vec3::UnitY(), h.y(), h.z()),
            rect_facet({-h.x(), 0, 0}, -Vec3::UnitX(), Vec3::UnitZ(), h.z(), h.y()),
            rect_facet({0, h.y(), 0}, Vec3::UnitY(), Vec3::UnitZ(), h.z(), h.x()),
            rect_facet({0, -h.y(), 0}, -Vec3::UnitY(), Vec3::UnitX(), h.x(), h.z()),
            rect_facet({0, 0, h.z()}, Vec3::UnitZ(), Vec3::UnitX(), h.x(), h.y()),
            rect_facet({0, 0, -h.z()}, -Vec3::UnitZ(), Vec3::UnitY(), h.y(), h.x()),
        };
        return out;
    }
    if (const auto* cyl = std::get_if<geom::Cylinder>(&shape)) {
        constexpr int kSides = 32;
        FacetSet out;
        out.facets = {
            disk_facet({0, 0, 0.5 * cyl->height}, Vec3::UnitZ(), Vec3::UnitX(), cyl->radius,
                       kSides),
            disk_facet({0, 0, -0.5 * cyl->height}, -Vec3::UnitZ(), Vec3::UnitX(), cyl->radius,
                       kSides),
        };
        return out;
    }
    throw UnsupportedShape("capsules have no planar facet");
}

std::vector<SuctionPose> sample_poses(const FacetSet& facets, const SuctionParams& params) {
    if (params.pad_radius <= 0 || params.grid_step <= 0 || params.margin < 0 ||
        params.spin_count < 1)
        throw ValidationError("suction sampling parameters must be positive");

    std::vector<SuctionPose> out;
    for (std::size_t fi = 0; fi < facets.facets.size(); ++fi) {
        const Facet& f = facets.facets[fi];
        const Vec3 origin = f.polygon.front();

        // facet-plane coordinates of the polygon
        std::vector<Eigen::Vector2d> poly2;
        poly2.reserve(f.polygon.size());
        double umin = 0, umax = 0, vmin = 0, vmax = 0;
        for (std::size_t i = 0; i < f.polygon.size(); ++i) {
            const Vec3 d = f.polygon[i] - origin;
            const Eigen::Vector2d p(d.dot(f.u), d.dot(f.v));
            poly2.push_back(p);
            umin = std::min(umin, p.x());
            umax = std::max(umax, p.x());
            vmin = std::min(vmin, p.y());
            vmax = std::max(vmax, p.y());
        }

        const double clearance = params.pad_radius + params.margin;
        const auto admits_pad = [&](const Eigen::Vector2d& p) {
            for (std::size_t i = 0; i < poly2.size(); ++i) {
                const Eigen::Vector2d a = poly2[i];
                const Eigen::Vector2d b = poly2[(i + 1) % poly2.size()];
                const Eigen::Vector2d e = b - a;
                const double len = e.norm();
                if (len < 1e-12) continue;
                // CCW winding: inward normal is the edge direction rotated +90
                const Eigen::Vector2d inward(-e.y() / len, e.x() / len);
                if ((p - a).dot(inward) < clearance - 1e-12) return false;
            }
            return true;
        };

        for (int kv = 1; vmin + kv * params.grid_step < vmax - 1e-12; ++kv) {
            for (int ku = 1; umin + ku * params.grid_step < umax - 1e-12; ++ku) {
                const Eigen::Vector2d p2(umin + ku * params.grid_step,
                                         vmin + kv * params.grid_step);
                if (!admits_pad(p2)) continue;
                const Vec3 contact = origin + p2.x() * f.u + p2.y() * f.v;
                const double dist = (contact - f.centroid).norm();
                for (int s = 0; s < params.spin_count; ++s) {
                    const double angle = 2.0 * M_PI * s / params.spin_count;
                    const Vec3 su = std::cos(angle) * f.u + std::sin(angle) * f.v;
                    const Vec3 sv = f.normal.cross(su);
                    geom::Mat3 rot;
                    rot.col(0) = su;
                    rot.col(1) = sv;
                    rot.col(2) = f.normal;
                    SuctionPose pose;
                    pose.tool_in_object = RigidTransform(contact, geom::Quat(rot));
                    pose.facet_index = static_cast<int>(fi);
                    pose.contact_point = contact;
                    pose.center_distance = dist;
                    out.push_back(std::move(pose));
                }
            }
        }
    }
    if (out.empty()) throw NoPoses("no facet admits the suction pad");

    // centroid-first; stable sort keeps facet order, grid order and spin order
    // as generated for equal distances
    std::stable_sort(out.begin(), out.end(), [](const SuctionPose& a, const SuctionPose& b) {
        if (a.center_distance != b.center_distance) return a.center_distance < b.center_distance;
        return a.facet_index < b.facet_index;
    });
    return out;
}

FacetSet filter_upward(const FacetSet& facets, const RigidTransform& object_pose,
                       double min_dot) {
    FacetSet out;
    for (const Facet& f : facets.facets) {
        if (object_pose.rotate(f.normal).dot(Vec3::UnitZ()) > min_dot) out.facets.push_back(f);
    }
    return out;
}

RigidTransform tool_pose_on_object(const RigidTransform& object_pose, const SuctionPose& pose) {
    return geom::compose(object_pose, pose.tool_in_object);
}

} // namespace toolplan::suction
