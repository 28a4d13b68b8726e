#include <fstream>

#include "toolplan/graspdb/graspdb.hpp"
#include "toolplan/io/json_codec.hpp"
#include "toolplan/util/errors.hpp"

namespace toolplan::graspdb {

using io::Json;

namespace {

constexpr const char* kFormat = "toolplan/graspdb";

Json grasp_to_json(const Grasp& g) {
    Json j;
    j["pose"] = io::to_json(g.hand_pose);
    j["jaw_width"] = g.jaw_width;
    j["approach"] = io::to_json(g.approach);
    return j;
}

Grasp grasp_from_json(const Json& j, const std::string& where) {
    if (!j.is_object() || !j.contains("pose") || !j.contains("jaw_width") ||
        !j.contains("approach"))
        throw FormatError(where + ": grasp needs pose, jaw_width, approach");
    Grasp g;
    g.hand_pose = io::pose_from(j["pose"], where + ".pose");
    g.jaw_width = j["jaw_width"].get<double>();
    g.approach = io::vec3_from(j["approach"], where + ".approach");
    return g;
}

Json side_to_json(const HandoverSide& s) {
    Json j;
    j["arm"] = robot::arm_name(s.arm);
    j["grasp_index"] = s.grasp_index;
    j["grasp"] = grasp_to_json(s.grasp);
    j["config"] = io::to_json(s.config);
    return j;
}

HandoverSide side_from_json(const Json& j, const std::string& where) {
    if (!j.is_object() || !j.contains("arm") || !j.contains("grasp_index") ||
        !j.contains("grasp") || !j.contains("config"))
        throw FormatError(where + ": handover side needs arm, grasp_index, grasp, config");
    HandoverSide s;
    const std::string arm = j["arm"].get<std::string>();
    if (arm == "left")
        s.arm = ArmId::left;
    else if (arm == "right")
        s.arm = ArmId::right;
    else
        throw FormatError(where + ".arm: expected left or right, got '" + arm + "'");
    s.grasp_index = j["grasp_index"].get<int>();
    s.grasp = grasp_from_json(j["grasp"], where + ".grasp");
    s.config = io::vector6_from(j["config"], where + ".config");
    return s;
}

} // namespace

GraspDatabase generate_database(const robot::DualArmModel& model, const ToolModel& tool,
                                const GenerationParams& params, std::uint64_t seed) {
    GraspDatabase db;
    db.tool_name = tool.name;
    db.params = params;
    db.seed = seed;
    db.grasps = sample_tool_grasps(tool, params.grasp_step, params.spin_count, model.gripper);
    db.pairs = compute_handover_pairs(model, tool, db.grasps, params.handover.region_samples,
                                      seed, params.handover);
    return db;
}

void save_database(const GraspDatabase& db, const std::string& path) {
    Json j;
    j["format"] = kFormat;
    j["format_version"] = db.format_version;
    j["tool_name"] = db.tool_name;
    j["units"] = {{"length", "m"}, {"angle", "rad"}};
    Json p;
    p["grasp_step"] = db.params.grasp_step;
    p["spin_count"] = db.params.spin_count;
    p["region_extents"] = io::to_json(db.params.handover.region_extents);
    p["region_samples"] = db.params.handover.region_samples;
    p["orientation_jitter"] = db.params.handover.orientation_jitter;
    p["max_pairs_per_sample"] = db.params.handover.max_pairs_per_sample;
    p["ik_restarts"] = db.params.handover.ik_restarts;
    p["max_feasible_per_arm"] = db.params.handover.max_feasible_per_arm;
    j["params"] = std::move(p);
    j["seed"] = db.seed;

    Json grasps = Json::array();
    for (const Grasp& g : db.grasps) grasps.push_back(grasp_to_json(g));
    j["grasps"] = std::move(grasps);

    Json pairs = Json::array();
    for (const HandoverPair& hp : db.pairs) {
        Json pj;
        pj["giver"] = side_to_json(hp.giver);
        pj["receiver"] = side_to_json(hp.receiver);
        pj["tool_pose"] = io::to_json(hp.tool_pose);
        pj["score"] = hp.score;
        pairs.push_back(std::move(pj));
    }
    j["handover_pairs"] = std::move(pairs);

    std::ofstream out(path);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out << j.dump(2) << '\n';
    if (!out) throw IoError("write failed for '" + path + "'");
}

GraspDatabase load_database(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "'");
    Json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(path + ": " + e.what());
    }
    if (!j.is_object() || j.value("format", "") != kFormat)
        throw FormatError(path + ": not a " + std::string(kFormat) + " file");
    GraspDatabase db;
    try {
        db.format_version = j.at("format_version").get<int>();
        db.tool_name = j.at("tool_name").get<std::string>();
        const Json& p = j.at("params");
        db.params.grasp_step = p.at("grasp_step").get<double>();
        db.params.spin_count = p.at("spin_count").get<int>();
        db.params.handover.region_extents =
            io::vec3_from(p.at("region_extents"), "params.region_extents");
        db.params.handover.region_samples = p.at("region_samples").get<int>();
        db.params.handover.orientation_jitter = p.at("orientation_jitter").get<double>();
        db.params.handover.max_pairs_per_sample = p.at("max_pairs_per_sample").get<int>();
        db.params.handover.ik_restarts = p.at("ik_restarts").get<int>();
        db.params.handover.max_feasible_per_arm = p.at("max_feasible_per_arm").get<int>();
        db.seed = j.at("seed").get<std::uint64_t>();
        int idx = 0;
        for (const Json& gj : j.at("grasps")) {
            db.grasps.push_back(grasp_from_json(gj, "grasps[" + std::to_string(idx++) + "]"));
        }
        idx = 0;
        for (const Json& pj : j.at("handover_pairs")) {
            const std::string where = "handover_pairs[" + std::to_string(idx++) + "]";
            HandoverPair hp;
            hp.giver = side_from_json(pj.at("giver"), where + ".giver");
            hp.receiver = side_from_json(pj.at("receiver"), where + ".receiver");
            hp.tool_pose = io::pose_from(pj.at("tool_pose"), where + ".tool_pose");
            hp.score = pj.at("score").get<double>();
            db.pairs.push_back(std::move(hp));
        }
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(path + ": " + e.what());
    }
    return db;
}

} // namespace toolplan::graspdb
