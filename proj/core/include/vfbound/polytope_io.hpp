#pragma once

#include <filesystem>

#include <nlohmann/json.hpp>

#include "vfbound/polytope.hpp"

namespace vfbound {

/// {"dim": n, "symmetric": bool, "vertices": [[...]], "normals": [[...]]}
/// with at least one of "vertices" / "normals". Vertices are deduplicated.
Polytope polytope_from_json(const nlohmann::json& j);
Polytope load_polytope_json(const std::filesystem::path& path);

/// Writes both lists explicitly; implicit sets are materialized.
nlohmann::json polytope_to_json(const Polytope& p);

}  // namespace vfbound
