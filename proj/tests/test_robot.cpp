#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Dense>

#include "oracles.hpp"
#include "toolplan/robot/kinematics.hpp"
#include "toolplan/robot/model.hpp"

using namespace toolplan;
using namespace toolplan::robot;
using geom::RigidTransform;
using geom::Vec3;

namespace {

Vector6 random_config(Rng& rng, const ArmModel& arm, double shrink = 0.0) {
    Vector6 q;
    for (int i = 0; i < 6; ++i) {
        const double lo = arm.joints[i].lower + shrink;
        const double hi = arm.joints[i].upper - shrink;
        q[i] = uniform(rng, lo, hi);
    }
    return q;
}

// Independent FK oracle: explicit 4x4 homogeneous chain.
geom::Mat4 fk_matrix_chain(const ArmModel& arm, const Vector6& q) {
    geom::Mat4 m = arm.base_pose.matrix();
    for (int i = 0; i < 6; ++i) {
        m = m * arm.joints[i].offset.matrix();
        geom::Mat4 rot = geom::Mat4::Identity();
        rot.block<3, 3>(0, 0) =
            Eigen::AngleAxisd(q[i], arm.joints[i].axis.normalized()).toRotationMatrix();
        m = m * rot;
    }
    return m * arm.tcp_offset.matrix();
}

} // namespace

TEST_CASE("fk zero configuration equals offset composition") {
    const DualArmModel model = default_dual_arm();
    const RigidTransform tcp = forward_kinematics(model.left, Vector6::Zero());

    RigidTransform expected = model.left.base_pose;
    for (const auto& j : model.left.joints) expected = geom::compose(expected, j.offset);
    expected = geom::compose(expected, model.left.tcp_offset);
    CHECK(geom::approx_equal(tcp, expected, 1e-12, 1e-12));
}

TEST_CASE("fk matches homogeneous-matrix chain oracle") {
    const DualArmModel model = default_dual_arm();

    Vector6 q = Vector6::Zero();
    q[0] = M_PI / 2; // base joint about Z
    const RigidTransform tcp = forward_kinematics(model.left, q);
    CHECK((tcp.matrix() - fk_matrix_chain(model.left, q)).cwiseAbs().maxCoeff() < 1e-12);

    // base-Z rotation maps the zero-config end effector around the base axis
    const RigidTransform tcp0 = forward_kinematics(model.left, Vector6::Zero());
    const Vec3 base = model.left.base_pose.position;
    const Vec3 rotated = Eigen::AngleAxisd(M_PI / 2, Vec3::UnitZ()) * (tcp0.position - base) + base;
    CHECK((tcp.position - rotated).norm() < 1e-12);

    Rng rng(21);
    for (int i = 0; i < 50; ++i) {
        const Vector6 qr = random_config(rng, model.right);
        const RigidTransform t = forward_kinematics(model.right, qr);
        CHECK((t.matrix() - fk_matrix_chain(model.right, qr)).cwiseAbs().maxCoeff() < 1e-10);
    }
}

TEST_CASE("fk limit handling") {
    const DualArmModel model = default_dual_arm();
    Vector6 upper;
    for (int i = 0; i < 6; ++i) upper[i] = model.left.joints[i].upper;
    CHECK_NOTHROW((void)forward_kinematics(model.left, upper));

    Vector6 bad = Vector6::Zero();
    bad[2] = model.left.joints[2].upper + 0.1;
    CHECK_THROWS_AS((void)forward_kinematics(model.left, bad), LimitViolation);
    CHECK_THROWS_AS((void)jacobian(model.left, bad), LimitViolation);
    CHECK_THROWS_AS((void)manipulability(model.left, bad), LimitViolation);
}

TEST_CASE("jacobian matches central finite differences") {
    const DualArmModel model = default_dual_arm();
    Rng rng(22);
    const double h = 1e-6;
    int tested = 0;
    while (tested < 100) {
        const Vector6 q = random_config(rng, model.left, 0.05);
        if (manipulability(model.left, q) < 1e-4) continue; // skip near-singular postures
        const Matrix6 j = jacobian(model.left, q);
        Matrix6 fd;
        for (int i = 0; i < 6; ++i) {
            Vector6 qp = q, qm = q;
            qp[i] += h;
            qm[i] -= h;
            const auto fp = compute_frames(model.left, qp);
            const auto fm = compute_frames(model.left, qm);
            fd.block<3, 1>(0, i) = (fp.tcp.position - fm.tcp.position) / (2 * h);
            fd.block<3, 1>(3, i) =
                geom::rotation_error(fp.tcp.rotation, fm.tcp.rotation) / (2 * h);
        }
        const double rel = (fd - j).norm() / std::max(1.0, j.norm());
        CHECK(rel < 1e-5);
        ++tested;
    }
}

TEST_CASE("stretched posture is singular") {
    const DualArmModel model = default_dual_arm();
    // the fully stretched arm: all joints at zero
    const Matrix6 j = jacobian(model.left, Vector6::Zero());
    Eigen::FullPivLU<Matrix6> lu(j);
    lu.setThreshold(1e-9);
    CHECK(lu.rank() < 6);
    CHECK(manipulability(model.left, Vector6::Zero()) == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("manipulability equals singular-value product and is base-invariant") {
    const DualArmModel model = default_dual_arm();
    Rng rng(23);
    for (int i = 0; i < 40; ++i) {
        const Vector6 q = random_config(rng, model.left);
        const double w = manipulability(model.left, q);
        CHECK(w >= 0.0);

        Eigen::JacobiSVD<Matrix6> svd(jacobian(model.left, q));
        const double product = svd.singularValues().prod();
        CHECK(w == doctest::Approx(product).epsilon(1e-6));

        ArmModel moved = model.left;
        moved.base_pose = geom::compose(oracles::random_transform(rng), moved.base_pose);
        CHECK(manipulability(moved, q) == doctest::Approx(w).epsilon(1e-9));
    }
}

TEST_CASE("ik round trip on random reachable targets") {
    const DualArmModel model = default_dual_arm();
    Rng rng(24);
    int successes = 0;
    const int trials = 200;
    for (int i = 0; i < trials; ++i) {
        const Vector6 q_true = random_config(rng, model.right, 0.05);
        const RigidTransform target = forward_kinematics(model.right, q_true);
        Rng ik_rng(derive_seed(24, static_cast<std::uint64_t>(i)));
        const auto q = inverse_kinematics(model.right, target, ik_rng, 20);
        if (!q) continue;
        const RigidTransform reached = forward_kinematics(model.right, *q);
        CHECK((reached.position - target.position).norm() < 1e-4);
        CHECK(geom::rotation_angle_between(reached.rotation, target.rotation) < 1e-3);
        ++successes;
    }
    CHECK(successes >= 190); // >= 95%
}

TEST_CASE("ik edge cases") {
    const DualArmModel model = default_dual_arm();
    Rng rng(25);
    CHECK_FALSE(
        inverse_kinematics(model.left, RigidTransform::translation(10, 0, 0), rng, 6).has_value());

    const RigidTransform zero_target = forward_kinematics(model.left, Vector6::Zero());
    Rng rng2(26);
    const auto q = inverse_kinematics(model.left, zero_target, rng2, 6);
    REQUIRE(q.has_value());
    const RigidTransform reached = forward_kinematics(model.left, *q);
    CHECK((reached.position - zero_target.position).norm() < 1e-4);
}

TEST_CASE("robot_bodies composition and jaw checks") {
    const DualArmModel model = default_dual_arm();
    DualConfig c;
    c.left = model.home;
    c.right = model.home;
    const auto bodies = robot_bodies(model, c, 0.02, 0.02);
    const std::size_t links = model.left.link_capsules.size();
    CHECK(bodies.size() == model.torso_bodies.size() + 2 * (links + 2));

    const auto ignore = default_ignore_pairs(model);
    for (int i = 0; i + 1 <= 6; ++i) {
        CHECK(ignore.contains(geom::NamePair("left/link" + std::to_string(i),
                                             "left/link" + std::to_string(i + 1))));
        CHECK(ignore.contains(geom::NamePair("right/link" + std::to_string(i),
                                             "right/link" + std::to_string(i + 1))));
    }
    CHECK(ignore.contains(geom::NamePair("left/link6", "left/finger0")));

    // the shipped home pose is self-collision-free
    CHECK_FALSE(geom::collide_scene(bodies, ignore));

    CHECK_THROWS_AS((void)robot_bodies(model, c, 0.5, 0.02), StrokeExceeded);
    DualConfig bad = c;
    bad.left[1] = model.left.joints[1].upper + 1.0;
    CHECK_THROWS_AS((void)robot_bodies(model, bad, 0.02, 0.02), LimitViolation);
}

TEST_CASE("crossed arms collide") {
    const DualArmModel model = default_dual_arm();
    DualConfig c;
    c.left << -1.2, 1.2, 0.6, 0.0, 0.0, 0.0;
    c.right << 1.2, 1.2, 0.6, 0.0, 0.0, 0.0;
    const auto bodies = robot_bodies(model, c, 0.02, 0.02);
    const auto ignore = default_ignore_pairs(model);
    CHECK(geom::collide_scene(bodies, ignore));

    // confirm one offending cross-arm pair against the sampling oracle
    bool confirmed = false;
    for (const auto& a : bodies) {
        if (confirmed) break;
        for (const auto& b : bodies) {
            if (a.name.starts_with("left/") && b.name.starts_with("right/") &&
                geom::collide_pair(a, b) &&
                oracles::sampling_overlap(a.shape, a.pose, b.shape, b.pose)) {
                confirmed = true;
                break;
            }
        }
    }
    CHECK(confirmed);
}
