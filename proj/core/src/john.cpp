#include "vfbound/john.hpp"

#include <cmath>
#include <string>

#include "vfbound/errors.hpp"

namespace vfbound {

EllipsoidForm::EllipsoidForm(Matrix q) : q_(std::move(q)) {
  if (q_.rows() == 0 || q_.rows() != q_.cols()) throw InvalidArgument("ellipsoid form must be a non-empty square matrix");
  if (!q_.allFinite()) throw InvalidArgument("ellipsoid form has non-finite entries");
  const double scale = std::max(1.0, q_.cwiseAbs().maxCoeff());
  if ((q_ - q_.transpose()).cwiseAbs().maxCoeff() > 1e-10 * scale) {
    throw InvalidArgument("ellipsoid form is not symmetric");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> eig(q_, Eigen::EigenvaluesOnly);
  if (eig.info() != Eigen::Success || !(eig.eigenvalues().minCoeff() > 0.0)) {
    throw InvalidArgument("ellipsoid form is not positive definite");
  }
}

MveeResult mvee_symmetric(const RowMatrix& points, double tol, int max_iterations) {
  const auto m = points.rows();
  const auto n = points.cols();
  if (m == 0 || n == 0) throw InvalidArgument("MVEE needs a non-empty point list");
  if (!(tol > 0.0)) throw InvalidArgument("MVEE tolerance must be positive");
  if (row_rank(points) < n) throw RankDeficient("MVEE points do not span R^" + std::to_string(n));

  const double dn = static_cast<double>(n);
  Vector u = Vector::Constant(m, 1.0 / static_cast<double>(m));
  Vector g(m);
  Matrix x(n, n);
  double gap = 0.0;
  int iter = 0;
  for (;; ++iter) {
    x.noalias() = points.transpose() * u.asDiagonal() * points;
    Eigen::LLT<Matrix> llt(x);
    if (llt.info() != Eigen::Success) throw SolverFailure("MVEE design matrix lost positive definiteness");
    const Matrix solved = llt.solve(points.transpose());
    g = (points.transpose().array() * solved.array()).colwise().sum().transpose();

    Eigen::Index up = 0;
    const double kappa_up = g.maxCoeff(&up);
    gap = kappa_up / dn - 1.0;
    if (gap <= tol) break;
    if (iter >= max_iterations) {
      throw ConvergenceFailure("MVEE did not converge within " + std::to_string(max_iterations) + " iterations; gap " +
                                   std::to_string(gap),
                               gap);
    }

    Eigen::Index down = -1;
    double kappa_down = 0.0;
    for (Eigen::Index i = 0; i < m; ++i) {
      if (u(i) > 0.0 && (down < 0 || g(i) < kappa_down)) {
        down = i;
        kappa_down = g(i);
      }
    }
    const double away_gap = 1.0 - kappa_down / dn;

    if (gap >= away_gap) {
      const double step = (kappa_up - dn) / (dn * (kappa_up - 1.0));
      u *= 1.0 - step;
      u(up) += step;
    } else {
      const double floor = -u(down) / (1.0 - u(down));
      double step = floor;
      if (kappa_down > 1.0) step = std::max(floor, (kappa_down - dn) / (dn * (kappa_down - 1.0)));
      u *= 1.0 - step;
      u(down) += step;
      if (step == floor) u(down) = 0.0;
    }
  }
  Matrix q = x.inverse() / dn;
  q = 0.5 * (q + q.transpose());
  return MveeResult{EllipsoidForm(std::move(q)), std::move(u), gap, iter};
}

Matrix john_map(const EllipsoidForm& e) {
  Eigen::SelfAdjointEigenSolver<Matrix> eig(e.matrix());
  if (eig.info() != Eigen::Success) throw SolverFailure("eigendecomposition of the ellipsoid form failed");
  const Vector roots = eig.eigenvalues().cwiseSqrt();
  const Matrix& vecs = eig.eigenvectors();
  Matrix t = std::sqrt(static_cast<double>(e.dim())) * vecs * roots.asDiagonal() * vecs.transpose();
  return 0.5 * (t + t.transpose());
}

Polytope apply_transform(const Polytope& p, const Matrix& t) {
  if (t.rows() != p.dim() || t.cols() != p.dim()) throw InvalidArgument("transform must be dim x dim");
  Eigen::FullPivLU<Matrix> lu(t);
  if (!lu.isInvertible()) throw InvalidArgument("transform is singular");
  std::optional<VRep> v;
  std::optional<HRep> h;
  if (p.has_vrep()) v = p.vrep().mapped(t);
  if (p.has_hrep()) h = p.hrep().mapped(lu.inverse().transpose());
  return Polytope(std::move(v), std::move(h), p.symmetric());
}

bool in_john_position(const Polytope& p, double slack) {
  const auto r = p.cached_inradius();
  const auto big_r = p.cached_circumradius();
  if (!r || !big_r) return false;
  return *r >= 1.0 - slack && *big_r <= std::sqrt(static_cast<double>(p.dim())) * (1.0 + slack);
}

}  // namespace vfbound
