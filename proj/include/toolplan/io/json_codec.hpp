#pragma once

// Low-level JSON encoding shared by every file format (scene, robot, tool,
// grasp database, trajectory). Field order is fixed by using ordered_json and
// numbers round-trip exactly (shortest exact representation).

#include <json.hpp>

#include "toolplan/geom/shape.hpp"
#include "toolplan/geom/transform.hpp"
#include "toolplan/robot/model.hpp"
#include "toolplan/util/errors.hpp"

namespace toolplan::io {

using Json = nlohmann::ordered_json;

inline Json to_json(const geom::Vec3& v) { return Json::array({v.x(), v.y(), v.z()}); }

inline geom::Vec3 vec3_from(const Json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 3)
        throw SchemaError(where + ": expected a 3-element array");
    return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

inline Json to_json(const geom::RigidTransform& t) {
    Json j;
    j["position"] = to_json(t.position);
    j["quaternion"] = Json::array(
        {t.rotation.w(), t.rotation.x(), t.rotation.y(), t.rotation.z()});
    return j;
}

inline geom::RigidTransform pose_from(const Json& j, const std::string& where) {
    if (!j.is_object()) throw SchemaError(where + ": expected a pose object");
    if (!j.contains("position")) throw SchemaError(where + ".position: missing");
    if (!j.contains("quaternion")) throw SchemaError(where + ".quaternion: missing");
    const Json& q = j["quaternion"];
    if (!q.is_array() || q.size() != 4)
        throw SchemaError(where + ".quaternion: expected [w, x, y, z]");
    geom::Quat quat(q[0].get<double>(), q[1].get<double>(), q[2].get<double>(),
                    q[3].get<double>());
    if (std::abs(quat.norm() - 1.0) > 1e-6)
        throw SchemaError(where + ".quaternion: not normalized");
    return {vec3_from(j["position"], where + ".position"), quat};
}

inline Json to_json(const geom::Shape& s) {
    Json j;
    std::visit(
        [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, geom::Box>) {
                j["type"] = "box";
                j["half_extents"] = to_json(v.half_extents);
            } else if constexpr (std::is_same_v<T, geom::Cylinder>) {
                j["type"] = "cylinder";
                j["radius"] = v.radius;
                j["height"] = v.height;
            } else {
                j["type"] = "capsule";
                j["radius"] = v.radius;
                j["length"] = v.length;
            }
        },
        s);
    return j;
}

inline geom::Shape shape_from(const Json& j, const std::string& where) {
    if (!j.is_object() || !j.contains("type"))
        throw SchemaError(where + ".type: missing shape type");
    const std::string type = j["type"].get<std::string>();
    if (type == "box") {
        if (!j.contains("half_extents")) throw SchemaError(where + ".half_extents: missing");
        return geom::Box{vec3_from(j["half_extents"], where + ".half_extents")};
    }
    if (type == "cylinder") {
        if (!j.contains("radius") || !j.contains("height"))
            throw SchemaError(where + ": cylinder needs radius and height");
        return geom::Cylinder{j["radius"].get<double>(), j["height"].get<double>()};
    }
    if (type == "capsule") {
        if (!j.contains("radius") || !j.contains("length"))
            throw SchemaError(where + ": capsule needs radius and length");
        return geom::Capsule{j["radius"].get<double>(), j["length"].get<double>()};
    }
    throw SchemaError(where + ".type: unknown shape type '" + type + "'");
}

inline Json to_json(const robot::Vector6& v) {
    Json j = Json::array();
    for (int i = 0; i < 6; ++i) j.push_back(v[i]);
    return j;
}

inline robot::Vector6 vector6_from(const Json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 6)
        throw SchemaError(where + ": expected a 6-element array");
    robot::Vector6 v;
    for (int i = 0; i < 6; ++i) v[i] = j[i].get<double>();
    return v;
}

/// Rejects keys outside the allowed set; the message names the first unknown.
inline void reject_unknown_keys(const Json& j, std::initializer_list<const char*> allowed,
                                const std::string& where) {
    for (const auto& [key, value] : j.items()) {
        bool ok = false;
        for (const char* a : allowed) {
            if (key == a) {
                ok = true;
                break;
            }
        }
        if (!ok) throw SchemaError(where + ": unknown field '" + key + "'");
    }
}

} // namespace toolplan::io
