#pragma once

#include "vfbound/polytope.hpp"
#include "vfbound/types.hpp"

namespace vfbound {

inline constexpr double kJohnTolerance = 1e-6;
inline constexpr int kJohnMaxIterations = 100000;

/// The centered ellipsoid {x : x^T Q x <= 1}, Q symmetric positive definite.
class EllipsoidForm {
 public:
  /// Throws InvalidArgument unless Q is square, symmetric within 1e-10 and positive definite.
  explicit EllipsoidForm(Matrix q);

  int dim() const noexcept { return static_cast<int>(q_.rows()); }
  const Matrix& matrix() const noexcept { return q_; }
  /// x^T Q x
  double form(const VectorRef& x) const { return x.dot(q_ * x); }

 private:
  Matrix q_;
};

struct MveeResult {
  EllipsoidForm ellipsoid;
  /// Design weights on the input points; sum to 1.
  Vector weights;
  /// max_i v_i^T Q v_i - 1 at termination.
  double gap = 0.0;
  int iterations = 0;
};

/// Minimum-volume centered ellipsoid enclosing the rows of `points`.
///
/// Khachiyan's multiplicative ascent on the D-optimal design weights with
/// Todd-Yildirim away steps and the closed-form line search. The returned form
/// is Q = X(u)^{-1} / n with X(u) = sum u_i v_i v_i^T, so the weighted
/// contact identity sum u_i v_i v_i^T = Q^{-1} / n holds by construction.
/// Throws RankDeficient if the points do not span R^n and ConvergenceFailure
/// (carrying the gap) when `max_iterations` is reached.
MveeResult mvee_symmetric(const RowMatrix& points, double tol = kJohnTolerance, int max_iterations = kJohnMaxIterations);

/// T = sqrt(n) Q^{1/2}, mapping the ellipsoid onto sqrt(n) B_n.
Matrix john_map(const EllipsoidForm& e);

/// T(P): vertices v -> T v, normals a -> T^{-T} a. Offsets of a linear image
/// stay at 1, so the halfspaces remain in canonical form. Counts and the
/// vertex-facet incidence pattern are unchanged.
Polytope apply_transform(const Polytope& p, const Matrix& t);

/// B_n (1 - slack) subset P subset sqrt(n) (1 + slack) B_n, judged by the cached radii.
bool in_john_position(const Polytope& p, double slack);

}  // namespace vfbound
