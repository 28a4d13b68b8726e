#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "toolplan/suction/suction.hpp"

using namespace toolplan;
using namespace toolplan::suction;
using geom::RigidTransform;
using geom::Vec3;

namespace {

Facet unit_square_top() {
    Facet f;
    f.normal = Vec3::UnitZ();
    f.u = Vec3::UnitX();
    f.v = Vec3::UnitY();
    f.polygon = {{0, 0, 1}, {1, 0, 1}, {1, 1, 1}, {0, 1, 1}};
    f.centroid = Vec3(0.5, 0.5, 1);
    return f;
}

// independent point-to-polygon-edge distance in the facet plane
double min_edge_distance(const Facet& f, const Vec3& p) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < f.polygon.size(); ++i) {
        const Vec3 a = f.polygon[i];
        const Vec3 b = f.polygon[(i + 1) % f.polygon.size()];
        const Vec3 e = (b - a).normalized();
        const Vec3 d = (p - a) - (p - a).dot(e) * e;
        best = std::min(best, d.norm());
    }
    return best;
}

} // namespace

TEST_CASE("extract_facets per shape") {
    const auto box = extract_facets(geom::make_box(0.5, 0.5, 0.5));
    REQUIRE(box.facets.size() == 6);
    std::set<std::array<int, 3>> normals;
    for (const auto& f : box.facets) {
        normals.insert({static_cast<int>(std::round(f.normal.x())),
                        static_cast<int>(std::round(f.normal.y())),
                        static_cast<int>(std::round(f.normal.z()))});
        CHECK(f.normal.norm() == doctest::Approx(1.0));
        CHECK(f.polygon.size() == 4);
    }
    CHECK(normals.size() == 6);

    const auto can = extract_facets(geom::make_cylinder(0.033, 0.12));
    REQUIRE(can.facets.size() == 2);
    CHECK(can.facets[0].polygon.size() == 32);

    CHECK_THROWS_AS((void)extract_facets(geom::make_capsule(0.02, 0.1)), UnsupportedShape);
}

TEST_CASE("unit-square facet sampling matches brute-force enumeration") {
    FacetSet fs;
    fs.facets = {unit_square_top()};
    SuctionParams params{.pad_radius = 0.1, .grid_step = 0.25, .margin = 0.0, .spin_count = 1};
    const auto poses = sample_poses(fs, params);
    CHECK(poses.size() == 9);

    // brute-force oracle: all interior grid multiples whose pad fits
    std::set<std::pair<long, long>> expected;
    for (int ku = 1; ku * 0.25 < 1.0 - 1e-12; ++ku) {
        for (int kv = 1; kv * 0.25 < 1.0 - 1e-12; ++kv) {
            const double u = ku * 0.25, v = kv * 0.25;
            const double edge_dist = std::min({u, 1 - u, v, 1 - v});
            if (edge_dist >= 0.1) expected.insert({std::lround(u * 1000), std::lround(v * 1000)});
        }
    }
    CHECK(expected.size() == 9);
    std::set<std::pair<long, long>> got;
    for (const auto& p : poses) {
        got.insert({std::lround(p.contact_point.x() * 1000),
                    std::lround(p.contact_point.y() * 1000)});
    }
    CHECK(got == expected);

    // centroid sample ranks first
    CHECK((poses.front().contact_point - Vec3(0.5, 0.5, 1)).norm() < 1e-12);
    CHECK(poses.front().center_distance == doctest::Approx(0.0));
}

TEST_CASE("facet smaller than pad yields NoPoses") {
    FacetSet fs;
    fs.facets = {unit_square_top()};
    SuctionParams params{.pad_radius = 0.6, .grid_step = 0.25, .margin = 0.0, .spin_count = 1};
    CHECK_THROWS_AS((void)sample_poses(fs, params), NoPoses);
}

TEST_CASE("spin expansion multiplies counts without moving contacts") {
    FacetSet fs;
    fs.facets = {unit_square_top()};
    SuctionParams one{.pad_radius = 0.1, .grid_step = 0.25, .margin = 0.0, .spin_count = 1};
    SuctionParams four = one;
    four.spin_count = 4;
    const auto base = sample_poses(fs, one);
    const auto spun = sample_poses(fs, four);
    CHECK(spun.size() == 4 * base.size());
    std::set<std::pair<long, long>> base_pts, spun_pts;
    for (const auto& p : base)
        base_pts.insert({std::lround(p.contact_point.x() * 1e6),
                         std::lround(p.contact_point.y() * 1e6)});
    for (const auto& p : spun)
        spun_pts.insert({std::lround(p.contact_point.x() * 1e6),
                         std::lround(p.contact_point.y() * 1e6)});
    CHECK(base_pts == spun_pts);
}

TEST_CASE("sampled poses satisfy pose invariants") {
    const auto facets = extract_facets(geom::make_box(0.11, 0.055, 0.035));
    SuctionParams params{.pad_radius = 0.015, .grid_step = 0.02, .margin = 0.005, .spin_count = 4};
    const auto poses = sample_poses(facets, params);
    REQUIRE(!poses.empty());
    for (const auto& p : poses) {
        const Facet& f = facets.facets[p.facet_index];
        // approach axis (tool -Z) anti-parallel to the outward normal
        const Vec3 approach = p.tool_in_object.rotate(-Vec3::UnitZ());
        CHECK(approach.dot(f.normal) == doctest::Approx(-1.0).epsilon(1e-6));
        // contact on the facet plane, clear of every edge
        CHECK(std::abs((p.contact_point - f.centroid).dot(f.normal)) < 1e-9);
        CHECK(min_edge_distance(f, p.contact_point) >=
              params.pad_radius + params.margin - 1e-9);
        // rank key consistent
        CHECK(p.center_distance ==
              doctest::Approx((p.contact_point - f.centroid).norm()).epsilon(1e-12));
    }
    // ranking: first pose is globally centroid-nearest
    for (const auto& p : poses) CHECK(poses.front().center_distance <= p.center_distance + 1e-12);
}

TEST_CASE("tool_pose_on_object composes and is equivariant") {
    SuctionPose rel;
    rel.tool_in_object = RigidTransform::translation(0, 0, 0.1);

    const RigidTransform obj = RigidTransform::identity();
    CHECK(geom::approx_equal(tool_pose_on_object(obj, rel), rel.tool_in_object, 1e-12, 1e-12));

    Rng rng31(31);
    SuctionPose ident;
    const RigidTransform pose2 = oracles::random_transform(rng31);
    CHECK(geom::approx_equal(tool_pose_on_object(pose2, ident), pose2, 1e-12, 1e-12));

    const RigidTransform obj3{Vec3(1, 0, 0),
                              geom::Quat(Eigen::AngleAxisd(M_PI / 2, Vec3::UnitZ()))};
    const RigidTransform got = tool_pose_on_object(obj3, rel);
    const geom::Mat4 expected = obj3.matrix() * rel.tool_in_object.matrix();
    CHECK((got.matrix() - expected).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((got.position - Vec3(1, 0, 0.1)).norm() < 1e-12);

    Rng rng(32);
    for (int i = 0; i < 50; ++i) {
        const RigidTransform w = oracles::random_transform(rng);
        const RigidTransform o = oracles::random_transform(rng);
        SuctionPose sp;
        sp.tool_in_object = oracles::random_transform(rng);
        const RigidTransform lhs = tool_pose_on_object(geom::compose(w, o), sp);
        const RigidTransform rhs = geom::compose(w, tool_pose_on_object(o, sp));
        CHECK(geom::approx_equal(lhs, rhs, 1e-9, 1e-9));
    }
}

TEST_CASE("filter_upward keeps only up-facing facets") {
    const auto facets = extract_facets(geom::make_box(0.04, 0.025, 0.015));
    const auto up_at_identity = filter_upward(facets, RigidTransform::identity());
    REQUIRE(up_at_identity.facets.size() == 1);
    CHECK(up_at_identity.facets[0].normal.isApprox(Vec3::UnitZ()));

    // roll the box 90 degrees: the -y facet normal now points up
    const RigidTransform rolled{Vec3::Zero(),
                                geom::Quat(Eigen::AngleAxisd(M_PI / 2, Vec3::UnitX()))};
    const auto up_rolled = filter_upward(facets, rolled);
    REQUIRE(up_rolled.facets.size() == 1);
    CHECK(rolled.rotate(up_rolled.facets[0].normal).isApprox(Vec3::UnitZ(), 1e-9));
}
