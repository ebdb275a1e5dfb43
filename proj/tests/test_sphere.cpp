#include <doctest.h>

#include <cmath>
#include <vector>

#include "oracles.hpp"
#include "vfbound/combinatorics.hpp"
#include "vfbound/errors.hpp"
#include "vfbound/sphere.hpp"

using namespace vfbound;

namespace {

Polytope cube(int n) { return generate({Family::Cube, n, 0, 0, {}}); }
Polytope cross(int n) { return generate({Family::CrossPolytope, n, 0, 0, {}}); }

bool within_sigma(const Estimate& e, double truth, double k = 3.0) {
  return std::abs(e.value - truth) <= k * e.std_error;
}

}  // namespace

TEST_CASE("sample points are unit vectors") {
  const auto s = sample_sphere(7, 20000, 1);
  CHECK(s.points.rows() == 20000);
  CHECK(((s.points.rowwise().norm().array() - 1.0).abs() <= 1e-12).all());
}

TEST_CASE("dimension one gives only +-1") {
  const auto s = sample_sphere(1, 1000, 5);
  CHECK((s.points.array().abs() == 1.0).all());
  CHECK((s.points.array() > 0).count() > 400);
  CHECK((s.points.array() < 0).count() > 400);
}

TEST_CASE("coordinate means vanish in dimension 3") {
  const std::size_t n = 100000;
  const auto s = sample_sphere(3, n, 2);
  const Vector mean = s.points.colwise().mean().transpose();
  CHECK((mean.array().abs() <= 4.0 / std::sqrt(double(n))).all());
}

TEST_CASE("first coordinate is uniform on [-1, 1] in dimension 3") {
  const auto s = sample_sphere(3, 100000, 3);
  std::vector<double> xs(s.points.rows());
  for (Eigen::Index i = 0; i < s.points.rows(); ++i) xs[static_cast<std::size_t>(i)] = s.points(i, 0);
  CHECK(oracle::ks_uniform_pm1(xs) < 0.01);
}

TEST_CASE("sampling is deterministic and independent of thread count") {
  const auto a = sample_sphere(5, 30000, 99, 1);
  const auto b = sample_sphere(5, 30000, 99, 4);
  const auto c = sample_sphere(5, 30000, 99, 1);
  CHECK(a.points == b.points);
  CHECK(a.points == c.points);
  CHECK(a.points != sample_sphere(5, 30000, 100).points);
  // A longer sample extends a shorter one chunk by chunk.
  const auto longer = sample_sphere(5, 40000, 99);
  CHECK(longer.points.topRows(30000) == a.points);
  CHECK(estimate_M(cube(5), a).value == estimate_M(cube(5), c).value);
}

TEST_CASE("bad sampling parameters") {
  CHECK_THROWS_AS(sample_sphere(0, 10, 1), InvalidArgument);
  CHECK_THROWS_AS(sample_sphere(3, 0, 1), InvalidArgument);
}

TEST_CASE("M of the cube in dimension 3 matches quadrature") {
  const auto s = sample_sphere(3, 100000, 4);
  const auto m = estimate_M(cube(3), s);
  CHECK(m.count == 100000);
  CHECK(m.seed == 4);
  CHECK(within_sigma(m, oracle::kMeanMaxAbsCoord3));
}

TEST_CASE("M of the cross-polytope and M* of the cube in dimension 3 are 3/2") {
  const auto s = sample_sphere(3, 100000, 5);
  CHECK(within_sigma(estimate_M(cross(3), s), 1.5));
  CHECK(within_sigma(estimate_Mstar(cube(3), s), 1.5));
}

TEST_CASE("scaling the polytope scales M exactly") {
  const auto s = sample_sphere(4, 20000, 6);
  const Polytope p = cross(4);
  Matrix two = 2.0 * Matrix::Identity(4, 4);
  const Polytope big(p.vrep().mapped(two), p.hrep().mapped(0.5 * Matrix::Identity(4, 4)), true);
  CHECK(estimate_M(big, s).value == doctest::Approx(estimate_M(p, s).value / 2).epsilon(1e-15));
}

TEST_CASE("M* of P equals M of the dual on the same sample") {
  const auto s = sample_sphere(4, 20000, 7);
  const Polytope p = with_both_representations(generate({Family::RandomGaussianSymmetric, 4, 7, 3, {}}));
  const auto a = estimate_Mstar(p, s);
  const auto b = estimate_M(polar_dual(p), s);
  CHECK(a.value == b.value);
  CHECK(a.std_error == b.std_error);
}

TEST_CASE("M* of the cross-polytope in dimension 50 matches quadrature") {
  const auto s = sample_sphere(50, 100000, 8);
  CHECK(within_sigma(estimate_Mstar(cross(50), s), oracle::kMeanMaxAbsCoord50));
}

TEST_CASE("cap measure") {
  const auto s = sample_sphere(100, 100000, 9);
  Vector e1 = Vector::Zero(100);
  e1(0) = 1.0;
  const auto near_one = estimate_cap_measure(e1, 1.0 - 1e-12, s);
  CHECK(near_one.value == 1.0);

  const double bound = concentration_lower_bound(100, 0.3);
  CHECK(bound == doctest::Approx(0.98889100346).epsilon(1e-10));
  const auto cap = estimate_cap_measure(e1, 0.3, s);
  CHECK(cap.value >= bound - 3 * cap.std_error);

  Vector u = sample_sphere(100, 1, 1234).points.row(0).transpose();
  const auto cap_u = estimate_cap_measure(u, 0.1, s);
  const auto cap_e = estimate_cap_measure(e1, 0.1, s);
  CHECK(std::abs(cap_u.value - cap_e.value) <= 3 * std::hypot(cap_u.std_error, cap_e.std_error));

  CHECK_THROWS_AS(estimate_cap_measure(2.0 * e1, 0.3, s), InvalidArgument);
}

TEST_CASE("sublevel tail") {
  const auto s = sample_sphere(50, 100000, 10);
  const Polytope p = cross(50);
  CHECK(estimate_sublevel_tail(p, 1.0, s).value == 0.0);
  CHECK(estimate_sublevel_tail(p, 0.99 / std::sqrt(50.0), s).value == 1.0);

  const double log_v = std::log(100.0);
  const double t = std::sqrt(4 * log_v / 50);
  const double union_bound = 100.0 * std::exp(-50 * t * t / 2);
  CHECK(union_bound == doctest::Approx(0.01));
  const auto tail = estimate_sublevel_tail(p, t, s);
  CHECK(tail.value <= union_bound + 3 * tail.std_error);
  CHECK_THROWS_AS(estimate_sublevel_tail(p, 0.0, s), InvalidArgument);
}

TEST_CASE("concentration over a grid") {
  for (int n : {10, 50, 200}) {
    const auto s = sample_sphere(n, 20000, 100 + n);
    Vector u = Vector::Zero(n);
    u(n - 1) = 1.0;
    for (int k = 0; k < 10; ++k) {
      const double eps = 0.05 + 0.1 * k;
      const auto cap = estimate_cap_measure(u, eps, s);
      CHECK(cap.value >= concentration_lower_bound(n, eps) - 3 * cap.std_error);
    }
  }
}

TEST_CASE("union-bound tail over a t grid") {
  const int n = 20;
  const auto s = sample_sphere(n, 50000, 11);
  const Polytope p = cross(n);
  const double count = 2.0 * n;
  for (int k = 1; k <= 20; ++k) {
    const double t = 0.05 * k;
    const auto tail = estimate_sublevel_tail(p, t, s);
    const double bound = std::min(1.0, count * std::exp(-0.5 * n * t * t));
    CHECK(tail.value <= bound + 3 * tail.std_error);
  }
}

TEST_CASE("pointwise gauge times support is at least one") {
  const auto s = sample_sphere(5, 20000, 12);
  for (const Polytope& p : {cube(5), cross(5),
                            with_both_representations(generate({Family::RandomSign, 5, 12, 1, {}}))}) {
    const Vector g = gauge_rows(p, s.points);
    const Vector h = support_rows(p, s.points);
    CHECK((g.array() * h.array()).minCoeff() >= 1.0 - 1e-12);
    const auto m = estimate_M(p, s);
    const auto ms = estimate_Mstar(p, s);
    CHECK(m.value * ms.value >= 1.0 - 3 * product_std_error(m, ms));
  }
}

TEST_CASE("reported standard errors match the spread across seeds") {
  const Polytope p = cross(6);
  std::vector<double> values;
  double mean_se = 0;
  const int seeds = 40;
  for (int k = 0; k < seeds; ++k) {
    const auto e = estimate_M(p, sample_sphere(6, 4000, 1000 + k));
    values.push_back(e.value);
    mean_se += e.std_error / seeds;
  }
  double mu = 0;
  for (double v : values) mu += v / seeds;
  double var = 0;
  for (double v : values) var += (v - mu) * (v - mu) / (seeds - 1);
  const double spread = std::sqrt(var);
  CHECK(spread <= 2.0 * mean_se);
  CHECK(spread >= 0.5 * mean_se);
}
