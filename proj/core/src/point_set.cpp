#include "vfbound/point_set.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "vfbound/errors.hpp"

namespace vfbound {

namespace {

constexpr Eigen::Index kRowBlock = 2048;

bool is_positive_multiple_of_identity(const Matrix& m, double* factor) {
  if (m.rows() != m.cols() || m.rows() == 0) return false;
  const double c = m(0, 0);
  if (!(c > 0.0)) return false;
  const double tol = 1e-14 * std::abs(c);
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      const double expected = (i == j) ? c : 0.0;
      if (std::abs(m(i, j) - expected) > tol) return false;
    }
  }
  *factor = c;
  return true;
}

}  // namespace

PointSet PointSet::from_rows(RowMatrix points) {
  if (points.rows() == 0) throw InvalidArgument("point set must be non-empty");
  if (points.cols() == 0) throw InvalidArgument("point set must have positive dimension");
  if (!points.allFinite()) throw InvalidArgument("point set contains non-finite coordinates");
  const int dim = static_cast<int>(points.cols());
  return PointSet(dim, std::move(points));
}

PointSet PointSet::sign_cube(int dim, double scale) {
  if (dim < 1) throw InvalidArgument("sign cube dimension must be >= 1");
  if (!(scale > 0.0) || !std::isfinite(scale)) throw InvalidArgument("sign cube scale must be positive");
  return PointSet(dim, SignCube{scale});
}

double PointSet::count() const noexcept {
  if (const auto* rows = std::get_if<RowMatrix>(&data_)) return static_cast<double>(rows->rows());
  return std::ldexp(1.0, dim_);
}

double PointSet::log_count() const noexcept {
  if (const auto* rows = std::get_if<RowMatrix>(&data_)) return std::log(static_cast<double>(rows->rows()));
  return dim_ * std::numbers::ln2;
}

double PointSet::sign_cube_scale() const {
  if (const auto* cube = std::get_if<SignCube>(&data_)) return cube->scale;
  throw InvalidArgument("point set is explicit, not a sign cube");
}

const RowMatrix& PointSet::rows() const {
  if (const auto* rows = std::get_if<RowMatrix>(&data_)) return *rows;
  throw Unsupported("implicit sign-cube point set has no explicit rows; call materialize()");
}

RowMatrix PointSet::materialize(std::size_t limit) const {
  if (const auto* rows = std::get_if<RowMatrix>(&data_)) return *rows;
  const double s = std::get<SignCube>(data_).scale;
  if (dim_ >= 63 || (std::size_t{1} << dim_) > limit) {
    throw Unsupported("sign cube of dimension " + std::to_string(dim_) + " is too large to materialize");
  }
  const Eigen::Index n = Eigen::Index{1} << dim_;
  RowMatrix out(n, dim_);
  for (Eigen::Index k = 0; k < n; ++k) {
    // Bit (dim-1-j) of k selects the sign of coordinate j, so row 0 is all minus.
    for (int j = 0; j < dim_; ++j) {
      const bool plus = (k >> (dim_ - 1 - j)) & 1;
      out(k, j) = plus ? s : -s;
    }
  }
  return out;
}

double PointSet::max_dot(const VectorRef& x) const {
  if (x.size() != dim_) throw InvalidArgument("vector length does not match point set dimension");
  if (const auto* rows = std::get_if<RowMatrix>(&data_)) return (*rows * x).maxCoeff();
  return std::get<SignCube>(data_).scale * x.lpNorm<1>();
}

Vector PointSet::max_dot_rows(const RowMatrix& xs) const {
  if (xs.cols() != dim_) throw InvalidArgument("sample dimension does not match point set dimension");
  Vector out(xs.rows());
  if (const auto* cube = std::get_if<SignCube>(&data_)) {
    out = cube->scale * xs.rowwise().lpNorm<1>();
    return out;
  }
  const auto& pts = std::get<RowMatrix>(data_);
  for (Eigen::Index start = 0; start < xs.rows(); start += kRowBlock) {
    const Eigen::Index len = std::min(kRowBlock, xs.rows() - start);
    const Matrix dots = xs.middleRows(start, len) * pts.transpose();
    out.segment(start, len) = dots.rowwise().maxCoeff();
  }
  return out;
}

double PointSet::max_norm() const {
  if (const auto* rows = std::get_if<RowMatrix>(&data_)) return rows->rowwise().norm().maxCoeff();
  return std::get<SignCube>(data_).scale * std::sqrt(static_cast<double>(dim_));
}

PointSet PointSet::mapped(const Matrix& m) const {
  if (m.rows() != dim_ || m.cols() != dim_) throw InvalidArgument("map must be square of the point set dimension");
  if (const auto* cube = std::get_if<SignCube>(&data_)) {
    double factor = 0.0;
    if (is_positive_multiple_of_identity(m, &factor)) return sign_cube(dim_, cube->scale * factor);
  }
  RowMatrix pts = materialize();
  RowMatrix image = pts * m.transpose();
  return from_rows(std::move(image));
}

namespace {

// Row indices sorted by first coordinate; rows within `tol` of each other are
// then no further apart than `tol` in that ordering.
std::vector<Eigen::Index> order_by_first_coordinate(const RowMatrix& points) {
  std::vector<Eigen::Index> order(static_cast<std::size_t>(points.rows()));
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<Eigen::Index>(i);
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index a, Eigen::Index b) { return points(a, 0) < points(b, 0); });
  return order;
}

}  // namespace

RowMatrix dedup_rows(const RowMatrix& points, double tol) {
  const auto order = order_by_first_coordinate(points);
  std::vector<bool> drop(static_cast<std::size_t>(points.rows()), false);
  for (std::size_t a = 0; a < order.size(); ++a) {
    for (std::size_t b = a + 1; b < order.size() && points(order[b], 0) - points(order[a], 0) <= tol; ++b) {
      if ((points.row(order[a]) - points.row(order[b])).norm() <= tol) {
        // Keep the earlier occurrence.
        drop[static_cast<std::size_t>(std::max(order[a], order[b]))] = true;
      }
    }
  }
  std::vector<Eigen::Index> keep;
  for (Eigen::Index i = 0; i < points.rows(); ++i) {
    if (!drop[static_cast<std::size_t>(i)]) keep.push_back(i);
  }
  RowMatrix out(static_cast<Eigen::Index>(keep.size()), points.cols());
  for (std::size_t k = 0; k < keep.size(); ++k) out.row(static_cast<Eigen::Index>(k)) = points.row(keep[k]);
  return out;
}

bool closed_under_negation(const RowMatrix& points, double tol) {
  const auto order = order_by_first_coordinate(points);
  std::vector<double> firsts(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) firsts[i] = points(order[i], 0);
  for (Eigen::Index i = 0; i < points.rows(); ++i) {
    const double target = -points(i, 0);
    auto it = std::lower_bound(firsts.begin(), firsts.end(), target - tol);
    bool found = false;
    for (; it != firsts.end() && *it <= target + tol && !found; ++it) {
      const auto k = order[static_cast<std::size_t>(it - firsts.begin())];
      found = (points.row(i) + points.row(k)).norm() <= tol;
    }
    if (!found) return false;
  }
  return true;
}

int row_rank(const RowMatrix& points, double tol) {
  if (points.rows() == 0) return 0;
  Eigen::FullPivLU<Matrix> lu(points);
  lu.setThreshold(tol);
  return static_cast<int>(lu.rank());
}

}  // namespace vfbound
