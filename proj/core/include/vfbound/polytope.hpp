#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vfbound/point_set.hpp"
#include "vfbound/types.hpp"

namespace vfbound {

/// Vertex representation: P = conv(V).
using VRep = PointSet;
/// Halfspace representation in canonical form: P = {x : <a_i, x> <= 1 for all i}.
using HRep = PointSet;

/// Relative tolerance for checks between the two representations of one polytope.
inline constexpr double kConsistencyTolerance = 1e-7;

/// A full-dimensional convex polytope containing the origin in its interior,
/// carrying a vertex list, a canonical halfspace list, or both.
///
/// Immutable. Radii are computed once from whichever representation is present.
class Polytope {
 public:
  /// Throws InvalidArgument if neither representation is given or dimensions disagree.
  /// Semantic invariants are not checked here; see validate().
  Polytope(std::optional<VRep> vertices, std::optional<HRep> normals, bool symmetric);

  static Polytope from_vertices(VRep vertices, bool symmetric) { return {std::move(vertices), std::nullopt, symmetric}; }
  static Polytope from_normals(HRep normals, bool symmetric) { return {std::nullopt, std::move(normals), symmetric}; }

  int dim() const noexcept { return dim_; }
  bool symmetric() const noexcept { return symmetric_; }
  bool has_vrep() const noexcept { return vertices_.has_value(); }
  bool has_hrep() const noexcept { return normals_.has_value(); }

  const VRep& vrep() const;
  const HRep& hrep() const;

  std::optional<double> cached_inradius() const noexcept { return inradius_; }
  std::optional<double> cached_circumradius() const noexcept { return circumradius_; }

  Polytope with_vrep(VRep vertices) const { return {std::move(vertices), normals_, symmetric_}; }
  Polytope with_hrep(HRep normals) const { return {vertices_, std::move(normals), symmetric_}; }

 private:
  int dim_ = 0;
  std::optional<VRep> vertices_;
  std::optional<HRep> normals_;
  bool symmetric_ = false;
  std::optional<double> inradius_;
  std::optional<double> circumradius_;
};

/// h_P(x) = max over vertices of <v, x>.
double support(const Polytope& p, const VectorRef& x);
/// Support at each row of `xs`.
Vector support_rows(const Polytope& p, const RowMatrix& xs);

/// |x|_P = inf{t >= 0 : x in tP}.
///
/// With a halfspace list this is max_i <a_i, x>. With only vertices (symmetric
/// polytopes only) it is the optimum of min sum(lambda) s.t. sum lambda_i v_i = x,
/// lambda >= 0, solved with lp_solve().
double gauge(const Polytope& p, const VectorRef& x);
Vector gauge_rows(const Polytope& p, const RowMatrix& xs);

/// The vertex-list LP route of gauge(), callable on any polytope with vertices.
double gauge_by_lp(const RowMatrix& vertices, const VectorRef& x);

/// P° = {x : <x, y> <= 1 for all y in P}. Swaps the two representations.
Polytope polar_dual(const Polytope& p);

/// R(P) = max |v|.
double circumradius(const Polytope& p);
/// r(P) = 1 / max |a_i|, i.e. 1 / R(P°).
double inradius(const Polytope& p);

struct Violation {
  enum class Kind {
    Duplicate,
    Symmetry,
    ZeroNormal,
    OriginNotInterior,
    Unbounded,
    Containment,
    Tightness,
  };
  Kind kind;
  std::string message;
};

std::string to_string(Violation::Kind kind);

/// Checks every polytope invariant. Empty iff valid.
///
/// Implicit point sets larger than 2^12 are trusted: they come from the
/// analytic families, whose invariants hold by construction.
std::vector<Violation> validate(const Polytope& p);

}  // namespace vfbound
