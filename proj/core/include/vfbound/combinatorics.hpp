#pragma once

#include <cstdint>
#include <string>

#include "vfbound/polytope.hpp"
#include "vfbound/types.hpp"

namespace vfbound {

/// Exact facet enumeration limits: C(24, 7) is about 350k vertex subsets.
inline constexpr int kEnumerationMaxDim = 7;
inline constexpr int kEnumerationMaxVertices = 24;
/// |<a, v> - 1| below which a vertex lies on the candidate hyperplane.
inline constexpr double kCoplanarTolerance = 1e-9;
/// Euclidean distance under which two facet normals are merged.
inline constexpr double kNormalMergeTolerance = 1e-7;

enum class Family { Cube, CrossPolytope, RandomSign, RandomGaussianSymmetric, File };

std::string to_string(Family f);
/// Accepts the names printed by to_string(); throws InvalidArgument otherwise.
Family family_from_string(const std::string& name);

struct FamilySpec {
  Family family = Family::Cube;
  int dim = 1;
  /// Vertex pairs drawn by the random families; ignored otherwise.
  int pairs = 0;
  std::uint64_t seed = 0;
  /// Polytope JSON file for Family::File.
  std::string path;

  /// Stable, comma-free identifier such as "cube:n=4" or "random_sign:n=6:m=10:seed=3".
  std::string label() const;
};

/// Builds the polytope described by `spec`.
///
///   cube                       VRep {±1}^n (implicit), HRep {±e_i}
///   cross_polytope             VRep {±e_i}, HRep {±1}^n (implicit)
///   random_sign                m uniform points of {±1}^n / sqrt(n) and their negations, deduplicated
///   random_gaussian_symmetric  m uniform unit vectors and their negations
///   file                       loaded with load_polytope_json()
///
/// Random draws that fail to span R^n are redrawn from a derived seed up to
/// 100 times before RankDeficient is thrown.
Polytope generate(const FamilySpec& spec);

/// Points of `points` that are not in the convex hull of the others, after
/// deduplication. Order of first occurrence is preserved.
RowMatrix extreme_points(const RowMatrix& points);

/// Canonical facet normals of conv(vertices), which must contain the origin in
/// its interior. Every n-subset spanning a hyperplane <a, x> = 1 with all
/// vertices on the <= side contributes a; duplicates are merged so the
/// result has exactly |F| rows, sorted lexicographically.
RowMatrix enumerate_facets(const RowMatrix& vertices);

enum class CountMethod { Analytic, Enumerated, DualEnumerated };
std::string to_string(CountMethod m);
CountMethod count_method_from_string(const std::string& name);

/// |V| and |F|. Exact for every integer below 2^53 and for powers of two,
/// which covers the analytic families up to n = 1023.
struct FaceCounts {
  double num_vertices = 0;
  double num_facets = 0;
  CountMethod method = CountMethod::Analytic;
};

/// Vertex count from the vertex list (analytic for implicit sets, extreme
/// points otherwise), or from the facets of the dual. Facet count from the
/// halfspace list (irredundant normals are the vertices of the dual), or from
/// enumerate_facets(). Throws Unsupported when enumeration would be needed
/// beyond its limits.
FaceCounts face_counts(const Polytope& p);

/// The method face_counts() would report for p: Enumerated when the halfspace
/// list is missing, DualEnumerated when the vertex list is missing.
CountMethod count_method_for(const Polytope& p);

/// P with both representations, computing the missing one by enumeration
/// and pruning explicit lists to their extreme points.
Polytope with_both_representations(const Polytope& p);

/// incidence(i, j) is true when vertex i lies on facet j.
Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic> incidence(const RowMatrix& vertices, const RowMatrix& normals,
                                                              double tol = kConsistencyTolerance);

}  // namespace vfbound
