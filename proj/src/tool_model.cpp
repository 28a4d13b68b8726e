#include "toolplan/graspdb/graspdb.hpp"

namespace toolplan::graspdb {

std::vector<Body> ToolModel::bodies_at(const RigidTransform& world_pose,
                                       const std::string& prefix) const {
    std::vector<Body> out;
    out.reserve(parts.size());
    for (const ToolPart& p : parts) {
        out.push_back({prefix + p.name, p.shape, geom::compose(world_pose, p.local_pose)});
    }
    return out;
}

ToolModel long_symmetric_tool() {
    ToolModel tool;
    tool.name = "long_symmetric";
    tool.parts = {
        {"pad", geom::make_cylinder(0.020, 0.024), RigidTransform::translation(0, 0, 0.012)},
        {"neck", geom::make_cylinder(0.008, 0.016), RigidTransform::translation(0, 0, 0.032)},
        {"handle", geom::make_box(0.009, 0.009, 0.090),
         RigidTransform::translation(0, 0, 0.130)},
    };
    tool.grasp_segments = {
        {Vec3(0, 0, 0.052), Vec3(0, 0, 0.208), Vec3::UnitX(), 0.018},
    };
    tool.pad_center = RigidTransform::identity();
    return tool;
}

ToolModel short_asymmetric_tool() {
    ToolModel tool;
    tool.name = "short_asymmetric";
    tool.parts = {
        {"pad", geom::make_cylinder(0.020, 0.024), RigidTransform::translation(0, 0, 0.012)},
        // body is wider than the gripper stroke, so only the side handle is graspable
        {"body", geom::make_cylinder(0.046, 0.050), RigidTransform::translation(0, 0, 0.049)},
        {"handle", geom::make_box(0.040, 0.008, 0.008),
         RigidTransform::translation(0.086, 0, 0.060)},
    };
    tool.grasp_segments = {
        {Vec3(0.054, 0, 0.060), Vec3(0.118, 0, 0.060), Vec3::UnitY(), 0.016},
    };
    tool.pad_center = RigidTransform::identity();
    return tool;
}

} // namespace toolplan::graspdb
