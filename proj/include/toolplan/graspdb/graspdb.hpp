#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "toolplan/geom/collide.hpp"
#include "toolplan/robot/model.hpp"

namespace toolplan::graspdb {

using geom::Body;
using geom::RigidTransform;
using geom::Shape;
using geom::Vec3;
using robot::ArmId;
using robot::Vector6;

struct ToolPart {
    std::string name;
    Shape shape;
    RigidTransform local_pose;
};

/// A straight run of the handle where the jaws may close. The closing axis is
/// perpendicular to the segment and grasp_width is the jaw opening at contact.
struct GraspSegment {
    Vec3 start;
    Vec3 end;
    Vec3 closing_axis;
    double grasp_width = 0.0;
};

/// Suction tool model in its own frame: the origin sits at the pad contact
/// face and -Z is the suction approach axis, so the body extends along +Z.
struct ToolModel {
    std::string name;
    std::vector<ToolPart> parts;
    std::vector<GraspSegment> grasp_segments;
    RigidTransform pad_center; // pad contact frame in tool coordinates

    /// World-posed collision bodies, named `<prefix><part name>`.
    std::vector<Body> bodies_at(const RigidTransform& world_pose,
                                const std::string& prefix) const;
};

/// Long straight handle above the pad; graspable over most of its length and
/// rotationally symmetric about the handle axis.
ToolModel long_symmetric_tool();

/// Stubby body wider than the gripper stroke with one short side handle.
ToolModel short_asymmetric_tool();

struct Grasp {
    RigidTransform hand_pose; // gripper TCP frame in tool frame
    double jaw_width = 0.0;
    Vec3 approach{Vec3::UnitZ()}; // tool frame

    bool operator==(const Grasp& o) const {
        return geom::bitwise_equal(hand_pose, o.hand_pose) && jaw_width == o.jaw_width &&
               approach == o.approach;
    }
};

/// Antipodal grasp family along each segment: stations every `step`, each
/// expanded by spin_count rotations about the closing axis and the
/// finger-swapped hand, then filtered against tool collisions. Throws
/// NoGrasps when nothing survives.
std::vector<Grasp> sample_tool_grasps(const ToolModel& tool, double step, int spin_count,
                                      const robot::GripperGeom& gripper = {});

struct HandoverSide {
    ArmId arm = ArmId::left;
    int grasp_index = -1;
    Grasp grasp;
    Vector6 config{Vector6::Zero()};

    bool operator==(const HandoverSide& o) const {
        return arm == o.arm && grasp_index == o.grasp_index && grasp == o.grasp &&
               config == o.config;
    }
};

struct HandoverPair {
    HandoverSide giver;
    HandoverSide receiver;
    RigidTransform tool_pose; // world, inside the handover region
    double score = 0.0;       // min of the two arms' manipulability

    bool operator==(const HandoverPair& o) const {
        return giver == o.giver && receiver == o.receiver &&
               geom::bitwise_equal(tool_pose, o.tool_pose) && score == o.score;
    }
};

struct HandoverParams {
    Vec3 region_extents{0.3, 0.3, 0.2};
    int region_samples = 64;
    double orientation_jitter = 0.25; // radians
    int max_pairs_per_sample = 8;
    int ik_restarts = 4;
    int max_feasible_per_arm = 12;

    bool operator==(const HandoverParams&) const = default;
};

/// IK-feasible, collision-free grasp pairs of the two arms over sampled tool
/// poses in the handover region, scored maximin and sorted by score
/// descending. Deterministic for a fixed seed. Throws NoPairs when empty.
std::vector<HandoverPair> compute_handover_pairs(const robot::DualArmModel& model,
                                                 const ToolModel& tool,
                                                 const std::vector<Grasp>& grasps,
                                                 int region_samples, std::uint64_t seed,
                                                 HandoverParams params = {});

struct GenerationParams {
    double grasp_step = 0.02;
    int spin_count = 8;
    HandoverParams handover;

    bool operator==(const GenerationParams&) const = default;
};

struct GraspDatabase {
    int format_version = 1;
    std::string tool_name;
    GenerationParams params;
    std::uint64_t seed = 0;
    std::vector<Grasp> grasps;
    std::vector<HandoverPair> pairs;

    bool operator==(const GraspDatabase&) const = default;
};

GraspDatabase generate_database(const robot::DualArmModel& model, const ToolModel& tool,
                                const GenerationParams& params, std::uint64_t seed);

void save_database(const GraspDatabase& db, const std::string& path);
GraspDatabase load_database(const std::string& path);

} // namespace toolplan::graspdb
