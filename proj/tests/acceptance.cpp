// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "vfbound/combinatorics.hpp"
#include "vfbound/errors.hpp"
#include "vfbound/harness.hpp"
#include "vfbound/john.hpp"
#include "vfbound/polytope.hpp"
#include "vfbound/sphere.hpp"

using namespace vfbound;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  double budget_seconds;
  std::function<Outcome()> body;
};

FamilySpec spec(Family f, int n, int pairs = 0, std::uint64_t seed = 0) {
  FamilySpec s;
  s.family = f;
  s.dim = n;
  s.pairs = pairs;
  s.seed = seed;
  return s;
}

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

bool same_rows(const PointSet& a, const PointSet& b) {
  if (a.dim() != b.dim() || a.count() != b.count() || a.is_implicit() != b.is_implicit()) return false;
  if (a.is_implicit()) return a.sign_cube_scale() == b.sign_cube_scale();
  return a.rows() == b.rows();
}

Outcome analytic_duality() {
  Outcome out;
  for (int n = 2; n <= 7; ++n) {
    const Polytope cube = generate(spec(Family::Cube, n));
    const Polytope dual = polar_dual(cube);
    const FaceCounts fc = face_counts(dual);
    const bool counts = fc.num_vertices == 2.0 * n && fc.num_facets == std::ldexp(1.0, n);
    const Polytope back = polar_dual(dual);
    const bool involution = same_rows(back.vrep(), cube.vrep()) && same_rows(back.hrep(), cube.hrep());
    if (!counts || !involution) {
      out.ok = false;
      out.detail += fmt("n=%g |V|=%g |F|=%g; ", n, fc.num_vertices, fc.num_facets);
    }
  }
  if (out.ok) out.detail = "n=2..7: 2n vertices, 2^n facets, double dual identical";
  return out;
}

Outcome cross_mean_width_dim3() {
  const Polytope cross = generate(spec(Family::CrossPolytope, 3));
  const auto sample = sample_sphere(3, 1000000, 31);
  const Estimate m = estimate_M(cross, sample);
  Outcome out;
  out.ok = std::abs(m.value - 1.5) <= 3.0 * m.std_error;
  out.detail = fmt("M=%.6f se=%.2e |M-1.5|=%.2e", m.value, m.std_error, std::abs(m.value - 1.5));
  return out;
}

Outcome concentration_sweep() {
  Outcome out;
  int violations = 0;
  int cells = 0;
  double worst = 1e300;
  for (int n : {10, 50, 200}) {
    const auto sample = sample_sphere(n, 100000, derive_seed(41, static_cast<std::uint64_t>(n)));
    Vector u = Vector::Zero(n);
    u(0) = 1.0;
    for (int k = 0; k < 10; ++k) {
      const double eps = 0.05 + 0.1 * k;
      const Estimate cap = estimate_cap_measure(u, eps, sample);
      const double slack = cap.value - (concentration_lower_bound(n, eps) - 3.0 * cap.std_error);
      worst = std::min(worst, slack);
      ++cells;
      if (slack < 0.0) ++violations;
    }
  }
  out.ok = violations == 0;
  out.detail = fmt("%g cells, %g violations, min slack %.3e", cells, violations, worst);
  return out;
}

Outcome vertex_mean_width_bound() {
  std::vector<FamilySpec> specs;
  for (int n : {20, 50, 100}) specs.push_back(spec(Family::CrossPolytope, n));
  for (int m = 7; m <= 12; ++m) {
    for (std::uint64_t s = 1; s <= 5; ++s) specs.push_back(spec(Family::RandomGaussianSymmetric, 6, m, s));
  }
  Outcome out;
  double worst = 1e300;
  std::uint64_t stream = 0;
  for (const auto& sp : specs) {
    const Polytope p = generate(sp);
    const auto sample = sample_sphere(p.dim(), 100000, derive_seed(43, stream++));
    const Estimate mstar = estimate_Mstar(p, sample);
    const BoundCheck b = verify_lemma4(p, mstar);
    // The inequality itself is asserted whether or not its hypothesis holds.
    const double slack = b.margin;
    worst = std::min(worst, slack);
    if (!(slack >= 0.0) || !passed(b.status)) {
      out.ok = false;
      out.detail += sp.label() + " fails; ";
    }
  }
  out.detail += fmt("%g instances, min slack %.4f", static_cast<double>(specs.size()), worst);
  return out;
}

Outcome pointwise_trivial_bound() {
  const std::vector<FamilySpec> specs = {
      spec(Family::Cube, 6),         spec(Family::Cube, 20),
      spec(Family::CrossPolytope, 6), spec(Family::CrossPolytope, 20),
      spec(Family::RandomSign, 6, 10, 1), spec(Family::RandomSign, 5, 12, 2),
      spec(Family::RandomGaussianSymmetric, 6, 9, 3), spec(Family::RandomGaussianSymmetric, 4, 8, 4)};
  Outcome out;
  double worst = 1e300;
  std::uint64_t stream = 0;
  for (const auto& sp : specs) {
    const Polytope p = with_both_representations(generate(sp));
    const auto sample = sample_sphere(p.dim(), 100000, derive_seed(47, stream++));
    const Vector prod = (gauge_rows(p, sample.points).array() * support_rows(p, sample.points).array()).matrix();
    const double lo = prod.minCoeff();
    worst = std::min(worst, lo);
    if (!(lo >= 1.0 - 1e-12)) {
      out.ok = false;
      out.detail += sp.label() + " below 1; ";
    }
  }
  out.detail += fmt("%g families x 1e5 directions, min product %.15f", static_cast<double>(specs.size()), worst);
  return out;
}

Outcome john_sandwich() {
  Outcome out;
  int instances = 0;
  double worst_in = 1e300;
  double worst_out = 0.0;
  double worst_gap = 0.0;
  for (int n = 3; n <= 6; ++n) {
    for (int m : {n + 1, n + 3, n + 5}) {
      for (std::uint64_t s = 1; s <= 2; ++s) {
        const FamilySpec sp = spec(Family::RandomGaussianSymmetric, n, m, 100 * static_cast<std::uint64_t>(n) + s);
        const Polytope p = with_both_representations(generate(sp));
        const FaceCounts before = face_counts(p);
        const MveeResult mvee = mvee_symmetric(p.vrep().rows());
        const Polytope q = apply_transform(p, john_map(mvee.ellipsoid));
        const FaceCounts after = face_counts(with_both_representations(Polytope::from_vertices(q.vrep(), true)));
        const double r = inradius(q);
        const double rr = circumradius(q) / std::sqrt(static_cast<double>(n));
        worst_in = std::min(worst_in, r);
        worst_out = std::max(worst_out, rr);
        worst_gap = std::max(worst_gap, mvee.gap);
        ++instances;
        const bool ok = r >= 1.0 - 1e-4 && rr <= 1.0 + 1e-4 && mvee.gap <= 1e-6 &&
                        before.num_vertices == after.num_vertices && before.num_facets == after.num_facets;
        if (!ok) {
          out.ok = false;
          out.detail += sp.label() + " fails; ";
        }
      }
    }
  }
  out.detail += fmt("%g instances, min r %.7f, max R/sqrt(n) %.7f", instances, worst_in, worst_out);
  out.detail += fmt(", max gap %.2e", worst_gap);
  return out;
}

Outcome facet_oracle_equivalence() {
  Outcome out;
  int agree = 0;
  for (int i = 0; i < 20; ++i) {
    const int n = 3 + i % 3;
    const int pairs = n + (i / 3) % (9 - n);
    RowMatrix pts;
    if (i % 2 == 0) {
      pts = oracle::random_symmetric_unit_points(n, pairs, 700 + static_cast<std::uint64_t>(i));
    } else {
      pts = generate(spec(Family::RandomSign, n, pairs, 800 + static_cast<std::uint64_t>(i))).vrep().rows();
    }
    const std::size_t ours = static_cast<std::size_t>(enumerate_facets(pts).rows());
    const std::size_t theirs = oracle::facet_count_by_incidence(pts);
    if (ours == theirs) {
      ++agree;
    } else {
      out.ok = false;
      out.detail += fmt("instance %g: %g vs %g; ", i, static_cast<double>(ours), static_cast<double>(theirs));
    }
  }
  out.detail += fmt("%g/20 instances agree", agree);
  return out;
}

Outcome desk_scale_pipeline() {
  HarnessConfig cfg;
  for (int n : {4, 8, 16, 32, 64}) {
    cfg.instances.push_back(spec(Family::Cube, n));
    cfg.instances.push_back(spec(Family::CrossPolytope, n));
  }
  for (int m = 7; m <= 12; ++m) {
    for (std::uint64_t s = 1; s <= 3; ++s) cfg.instances.push_back(spec(Family::RandomGaussianSymmetric, 6, m, s));
  }
  for (std::uint64_t s = 1; s <= 3; ++s) {
    cfg.instances.push_back(spec(Family::RandomSign, 6, 10, s));
    cfg.instances.push_back(spec(Family::RandomSign, 5, 12, s));
  }
  const ExperimentResult res = run_instances(cfg);
  Outcome out;
  out.ok = res.all_passed() && res.min_empirical_c > 0.5;
  for (const auto& f : res.failures) out.detail += f + " failed; ";
  out.detail += fmt("%g instances, min empirical c %.4f", static_cast<double>(res.reports.size()), res.min_empirical_c);
  out.detail += " at " + res.min_empirical_c_instance;
  return out;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "analytic duality of cube and cross-polytope", 1.0, analytic_duality},
      {2, "cross-polytope mean width in dimension 3 equals 3/2", 5.0, cross_mean_width_dim3},
      {3, "spherical cap concentration sweep", 30.0, concentration_sweep},
      {4, "vertex mean-width explicit bound", 60.0, vertex_mean_width_bound},
      {5, "pointwise gauge times support at least one", 30.0, pointwise_trivial_bound},
      {6, "John position sandwich", 60.0, john_sandwich},
      {7, "facet enumeration matches brute-force oracle", 120.0, facet_oracle_equivalence},
      {8, "full pipeline at desk scale", 300.0, desk_scale_pipeline},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.body();
    } catch (const std::exception& e) {
      out.ok = false;
      out.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < c.budget_seconds;
    const bool ok = out.ok && in_time;
    if (!ok) ++failures;
    std::printf("%s [%d] %s: %s (%.2f s, budget %.0f s%s)\n", ok ? "PASS" : "FAIL", c.id, c.name.c_str(),
                out.detail.c_str(), secs, c.budget_seconds, in_time ? "" : ", over budget");
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
