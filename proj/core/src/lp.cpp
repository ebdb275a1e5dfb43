#include "vfbound/lp.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "vfbound/errors.hpp"

namespace vfbound {

namespace {

constexpr double kPivotTol = 1e-9;
constexpr double kCostTol = 1e-9;

enum class VarKind { Shift, Mirror, Free };

struct VarMap {
  VarKind kind;
  int column;  // first standard-form structural column
  double offset;
};

// Standard form: min c.y + constant, A y (sense) b, y >= 0.
struct StandardForm {
  Matrix a;
  Vector b;
  std::vector<RowSense> senses;
  Vector c;
  double constant = 0.0;
  std::vector<VarMap> vars;
};

StandardForm to_standard_form(const LPProblem& p) {
  const int n = p.num_vars();
  const int m = p.num_rows();
  StandardForm sf;
  sf.vars.reserve(static_cast<std::size_t>(n));
  int cols = 0;
  int bound_rows = 0;
  for (int j = 0; j < n; ++j) {
    const double lo = p.lower(j);
    const double hi = p.upper(j);
    if (std::isfinite(lo)) {
      sf.vars.push_back({VarKind::Shift, cols++, lo});
      if (std::isfinite(hi)) ++bound_rows;
    } else if (std::isfinite(hi)) {
      sf.vars.push_back({VarKind::Mirror, cols++, hi});
    } else {
      sf.vars.push_back({VarKind::Free, cols, 0.0});
      cols += 2;
    }
  }
  const int rows = m + bound_rows;
  sf.a = Matrix::Zero(rows, cols);
  sf.b = Vector::Zero(rows);
  sf.c = Vector::Zero(cols);
  sf.senses.assign(p.senses.begin(), p.senses.end());
  sf.senses.resize(static_cast<std::size_t>(rows), RowSense::LessEqual);

  for (int i = 0; i < m; ++i) sf.b(i) = p.rhs(i);
  int next_bound_row = m;
  for (int j = 0; j < n; ++j) {
    const VarMap& v = sf.vars[static_cast<std::size_t>(j)];
    const double cj = p.objective(j);
    switch (v.kind) {
      case VarKind::Shift:
        sf.c(v.column) = cj;
        sf.constant += cj * v.offset;
        for (int i = 0; i < m; ++i) {
          sf.a(i, v.column) = p.constraints(i, j);
          sf.b(i) -= p.constraints(i, j) * v.offset;
        }
        if (std::isfinite(p.upper(j))) {
          sf.a(next_bound_row, v.column) = 1.0;
          sf.b(next_bound_row) = p.upper(j) - v.offset;
          ++next_bound_row;
        }
        break;
      case VarKind::Mirror:
        sf.c(v.column) = -cj;
        sf.constant += cj * v.offset;
        for (int i = 0; i < m; ++i) {
          sf.a(i, v.column) = -p.constraints(i, j);
          sf.b(i) -= p.constraints(i, j) * v.offset;
        }
        break;
      case VarKind::Free:
        sf.c(v.column) = cj;
        sf.c(v.column + 1) = -cj;
        for (int i = 0; i < m; ++i) {
          sf.a(i, v.column) = p.constraints(i, j);
          sf.a(i, v.column + 1) = -p.constraints(i, j);
        }
        break;
    }
  }
  return sf;
}

class Tableau {
 public:
  Tableau(const StandardForm& sf) : structural_(static_cast<int>(sf.c.size())) {
    const int m = static_cast<int>(sf.b.size());
    // Flip rows so every right-hand side is non-negative.
    Matrix a = sf.a;
    Vector b = sf.b;
    std::vector<RowSense> senses = sf.senses;
    for (int i = 0; i < m; ++i) {
      if (b(i) < 0.0) {
        a.row(i) *= -1.0;
        b(i) = -b(i);
        if (senses[static_cast<std::size_t>(i)] == RowSense::LessEqual) {
          senses[static_cast<std::size_t>(i)] = RowSense::GreaterEqual;
        } else if (senses[static_cast<std::size_t>(i)] == RowSense::GreaterEqual) {
          senses[static_cast<std::size_t>(i)] = RowSense::LessEqual;
        }
      }
    }
    int slacks = 0;
    int artificials = 0;
    for (RowSense s : senses) {
      if (s != RowSense::Equal) ++slacks;
      if (s != RowSense::LessEqual) ++artificials;
    }
    first_artificial_ = structural_ + slacks;
    cols_ = first_artificial_ + artificials;
    t_ = Matrix::Zero(m + 1, cols_ + 1);
    t_.topLeftCorner(m, structural_) = a;
    t_.block(0, cols_, m, 1) = b;
    basis_.assign(static_cast<std::size_t>(m), -1);
    int slack_col = structural_;
    int art_col = first_artificial_;
    for (int i = 0; i < m; ++i) {
      switch (senses[static_cast<std::size_t>(i)]) {
        case RowSense::LessEqual:
          t_(i, slack_col) = 1.0;
          basis_[static_cast<std::size_t>(i)] = slack_col++;
          break;
        case RowSense::GreaterEqual:
          t_(i, slack_col++) = -1.0;
          t_(i, art_col) = 1.0;
          basis_[static_cast<std::size_t>(i)] = art_col++;
          break;
        case RowSense::Equal:
          t_(i, art_col) = 1.0;
          basis_[static_cast<std::size_t>(i)] = art_col++;
          break;
      }
    }
    active_row_.assign(static_cast<std::size_t>(m), true);
    rhs_scale_ = std::max(1.0, b.size() > 0 ? b.cwiseAbs().maxCoeff() : 0.0);
  }

  int rows() const { return static_cast<int>(basis_.size()); }
  int iterations() const { return iterations_; }
  int width() const { return cols_ + rows(); }

  void set_costs(const Vector& costs) {
    const int m = rows();
    t_.row(m).setZero();
    t_.row(m).head(costs.size()) = costs.transpose();
    for (int i = 0; i < m; ++i) {
      if (!active_row_[static_cast<std::size_t>(i)]) continue;
      const double cb = costs(basis_[static_cast<std::size_t>(i)]);
      if (cb != 0.0) t_.row(m) -= cb * t_.row(i);
    }
  }

  Vector phase_one_costs() const {
    Vector c = Vector::Zero(cols_);
    for (int j = first_artificial_; j < cols_; ++j) c(j) = 1.0;
    return c;
  }

  /// Runs simplex iterations over columns [0, allowed). Returns false on unboundedness.
  bool optimize(int allowed, int cap) {
    const int m = rows();
    while (true) {
      int enter = -1;
      for (int j = 0; j < allowed; ++j) {
        if (t_(m, j) < -kCostTol && !is_basic(j)) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return true;
      int leave = -1;
      double best = 0.0;
      for (int i = 0; i < m; ++i) {
        if (!active_row_[static_cast<std::size_t>(i)]) continue;
        const double coef = t_(i, enter);
        if (coef <= kPivotTol) continue;
        const double ratio = t_(i, cols_) / coef;
        const double tie = 1e-12 * (1.0 + std::abs(best));
        if (leave < 0 || ratio < best - tie ||
            (ratio <= best + tie && basis_[static_cast<std::size_t>(i)] < basis_[static_cast<std::size_t>(leave)])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave < 0) return false;
      if (++iterations_ > cap) {
        throw SolverFailure("simplex iteration cap of " + std::to_string(cap) + " pivots exceeded");
      }
      pivot(leave, enter);
    }
  }

  double objective_value() const { return -t_(rows(), cols_); }

  bool phase_one_feasible() const { return objective_value() <= 1e-9 * rhs_scale_; }

  /// Pivots basic artificials out; rows that cannot be pivoted are redundant and are dropped.
  void expel_artificials() {
    for (int i = 0; i < rows(); ++i) {
      if (!active_row_[static_cast<std::size_t>(i)] || basis_[static_cast<std::size_t>(i)] < first_artificial_) continue;
      int col = -1;
      for (int j = 0; j < first_artificial_; ++j) {
        if (std::abs(t_(i, j)) > kPivotTol && !is_basic(j)) {
          col = j;
          break;
        }
      }
      if (col >= 0) {
        pivot(i, col);
      } else {
        active_row_[static_cast<std::size_t>(i)] = false;
      }
    }
  }

  int first_artificial() const { return first_artificial_; }
  int columns() const { return cols_; }

  Vector structural_values() const {
    Vector y = Vector::Zero(structural_);
    for (int i = 0; i < rows(); ++i) {
      if (!active_row_[static_cast<std::size_t>(i)]) continue;
      const int b = basis_[static_cast<std::size_t>(i)];
      if (b < structural_) y(b) = t_(i, cols_);
    }
    return y;
  }

 private:
  bool is_basic(int col) const {
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      if (active_row_[i] && basis_[i] == col) return true;
    }
    return false;
  }

  void pivot(int r, int s) {
    t_.row(r) /= t_(r, s);
    for (Eigen::Index i = 0; i < t_.rows(); ++i) {
      if (i == r) continue;
      if (i < rows() && !active_row_[static_cast<std::size_t>(i)]) continue;
      const double f = t_(i, s);
      if (f != 0.0) t_.row(i) -= f * t_.row(r);
    }
    basis_[static_cast<std::size_t>(r)] = s;
  }

  int structural_;
  int first_artificial_ = 0;
  int cols_ = 0;
  Matrix t_;
  std::vector<int> basis_;
  std::vector<bool> active_row_;
  double rhs_scale_ = 1.0;
  int iterations_ = 0;
};

void check_dimensions(const LPProblem& p) {
  const auto n = p.objective.size();
  const auto m = p.rhs.size();
  if (p.constraints.rows() != m) throw InvalidArgument("constraint matrix rows do not match rhs length");
  if (m > 0 && p.constraints.cols() != n) throw InvalidArgument("constraint matrix columns do not match objective length");
  if (static_cast<Eigen::Index>(p.senses.size()) != m) throw InvalidArgument("row sense count does not match rhs length");
  if (p.lower.size() != n || p.upper.size() != n) throw InvalidArgument("variable bounds do not match objective length");
  if (!p.objective.allFinite() || !p.rhs.allFinite() || !p.constraints.allFinite()) {
    throw InvalidArgument("LP data must be finite");
  }
  for (Eigen::Index j = 0; j < n; ++j) {
    if (std::isnan(p.lower(j)) || std::isnan(p.upper(j)) || p.lower(j) == std::numeric_limits<double>::infinity() ||
        p.upper(j) == -std::numeric_limits<double>::infinity()) {
      throw InvalidArgument("invalid variable bound");
    }
  }
}

}  // namespace

LPProblem LPProblem::nonnegative(Vector objective, Matrix constraints, std::vector<RowSense> senses, Vector rhs) {
  LPProblem p;
  const auto n = objective.size();
  p.objective = std::move(objective);
  p.constraints = std::move(constraints);
  p.senses = std::move(senses);
  p.rhs = std::move(rhs);
  p.lower = Vector::Zero(n);
  p.upper = Vector::Constant(n, std::numeric_limits<double>::infinity());
  return p;
}

LPResult lp_solve(const LPProblem& problem) {
  check_dimensions(problem);
  LPResult result;
  for (int j = 0; j < problem.num_vars(); ++j) {
    if (problem.lower(j) > problem.upper(j)) return result;
  }
  const StandardForm sf = to_standard_form(problem);
  Tableau tab(sf);
  const int cap = 50 * tab.width();

  tab.set_costs(tab.phase_one_costs());
  tab.optimize(tab.columns(), cap);
  if (!tab.phase_one_feasible()) {
    result.iterations = tab.iterations();
    return result;
  }
  tab.expel_artificials();

  Vector costs = Vector::Zero(tab.columns());
  costs.head(sf.c.size()) = sf.c;
  tab.set_costs(costs);
  const bool bounded = tab.optimize(tab.first_artificial(), cap);
  result.iterations = tab.iterations();
  if (!bounded) {
    result.status = LPStatus::Unbounded;
    result.objective = -std::numeric_limits<double>::infinity();
    return result;
  }

  const Vector y = tab.structural_values();
  result.solution.resize(problem.num_vars());
  for (int j = 0; j < problem.num_vars(); ++j) {
    const auto& v = sf.vars[static_cast<std::size_t>(j)];
    switch (v.kind) {
      case VarKind::Shift: result.solution(j) = v.offset + y(v.column); break;
      case VarKind::Mirror: result.solution(j) = v.offset - y(v.column); break;
      case VarKind::Free: result.solution(j) = y(v.column) - y(v.column + 1); break;
    }
  }
  result.status = LPStatus::Optimal;
  result.objective = problem.objective.dot(result.solution);
  return result;
}

}  // namespace vfbound
