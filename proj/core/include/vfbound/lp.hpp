#pragma once

#include <limits>
#include <vector>

#include "vfbound/types.hpp"

namespace vfbound {

enum class RowSense { LessEqual, GreaterEqual, Equal };

/// minimize  objective . x
/// subject to  constraints.row(i) . x  (sense_i)  rhs_i
///             lower <= x <= upper   (entries may be infinite)
struct LPProblem {
  Vector objective;
  Matrix constraints;
  Vector rhs;
  std::vector<RowSense> senses;
  Vector lower;
  Vector upper;

  /// All variables bounded below by zero and unbounded above.
  static LPProblem nonnegative(Vector objective, Matrix constraints, std::vector<RowSense> senses, Vector rhs);

  int num_vars() const noexcept { return static_cast<int>(objective.size()); }
  int num_rows() const noexcept { return static_cast<int>(rhs.size()); }
};

enum class LPStatus { Optimal, Infeasible, Unbounded };

struct LPResult {
  LPStatus status = LPStatus::Infeasible;
  double objective = std::numeric_limits<double>::quiet_NaN();
  Vector solution;
  int iterations = 0;
};

/// Dense two-phase tableau simplex with Bland's rule.
///
/// Deterministic for a given input. Throws InvalidArgument for inconsistent
/// dimensions and SolverFailure once 50 * (columns + rows) pivots of the
/// standard-form tableau have been spent.
LPResult lp_solve(const LPProblem& problem);

}  // namespace vfbound
