#include "vfbound/polytope_io.hpp"

#include <fstream>

#include "vfbound/errors.hpp"

namespace vfbound {

namespace {

RowMatrix rows_from_json(const nlohmann::json& arr, int dim, const char* field) {
  if (!arr.is_array() || arr.empty()) throw InvalidArgument(std::string("'") + field + "' must be a non-empty array");
  RowMatrix out(static_cast<Eigen::Index>(arr.size()), dim);
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const auto& row = arr[i];
    if (!row.is_array() || row.size() != static_cast<std::size_t>(dim)) {
      throw InvalidArgument(std::string("'") + field + "' entry " + std::to_string(i) + " does not have length " +
                            std::to_string(dim));
    }
    for (int j = 0; j < dim; ++j) {
      if (!row[static_cast<std::size_t>(j)].is_number()) throw InvalidArgument(std::string("non-numeric entry in '") + field + "'");
      out(static_cast<Eigen::Index>(i), j) = row[static_cast<std::size_t>(j)].get<double>();
    }
  }
  return out;
}

nlohmann::json rows_to_json(const RowMatrix& m) {
  auto arr = nlohmann::json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    auto row = nlohmann::json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    arr.push_back(std::move(row));
  }
  return arr;
}

}  // namespace

Polytope polytope_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw InvalidArgument("polytope JSON must be an object");
  if (!j.contains("dim") || !j["dim"].is_number_integer() || j["dim"].get<int>() < 1) {
    throw InvalidArgument("polytope JSON needs a positive integer 'dim'");
  }
  const int dim = j["dim"].get<int>();
  const bool symmetric = j.value("symmetric", false);
  std::optional<VRep> v;
  std::optional<HRep> h;
  if (j.contains("vertices")) v = PointSet::from_rows(dedup_rows(rows_from_json(j["vertices"], dim, "vertices")));
  if (j.contains("normals")) h = PointSet::from_rows(rows_from_json(j["normals"], dim, "normals"));
  if (!v && !h) throw InvalidArgument("polytope JSON needs 'vertices' or 'normals'");
  return Polytope(std::move(v), std::move(h), symmetric);
}

Polytope load_polytope_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open polytope file " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidArgument("malformed polytope JSON in " + path.string() + ": " + e.what());
  }
  return polytope_from_json(j);
}

nlohmann::json polytope_to_json(const Polytope& p) {
  nlohmann::json j;
  j["dim"] = p.dim();
  j["symmetric"] = p.symmetric();
  if (p.has_vrep()) j["vertices"] = rows_to_json(p.vrep().materialize());
  if (p.has_hrep()) j["normals"] = rows_to_json(p.hrep().materialize());
  return j;
}

}  // namespace vfbound
