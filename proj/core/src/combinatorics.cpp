#include "vfbound/combinatorics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

#include "vfbound/errors.hpp"
#include "vfbound/lp.hpp"
#include "vfbound/polytope_io.hpp"
#include "vfbound/sphere.hpp"

namespace vfbound {

namespace {

constexpr int kMaxRedraws = 100;

RowMatrix with_negations(const RowMatrix& pts) {
  RowMatrix out(2 * pts.rows(), pts.cols());
  out.topRows(pts.rows()) = pts;
  out.bottomRows(pts.rows()) = -pts;
  return out;
}

RowMatrix signed_unit_basis(int n) {
  RowMatrix out = RowMatrix::Zero(2 * n, n);
  for (int i = 0; i < n; ++i) {
    out(i, i) = 1.0;
    out(n + i, i) = -1.0;
  }
  return out;
}

RowMatrix draw_random_sign(int n, int m, std::uint64_t seed) {
  std::mt19937_64 engine(seed);
  const double s = 1.0 / std::sqrt(static_cast<double>(n));
  RowMatrix pts(m, n);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) pts(i, j) = (engine() >> 63) ? s : -s;
  }
  return dedup_rows(with_negations(pts));
}

RowMatrix draw_gaussian_symmetric(int n, int m, std::uint64_t seed) {
  return with_negations(sample_sphere(n, static_cast<std::size_t>(m), seed).points);
}

template <typename Draw>
RowMatrix draw_spanning(const FamilySpec& spec, Draw draw) {
  for (int attempt = 0; attempt < kMaxRedraws; ++attempt) {
    // Attempt 0 uses the instance seed itself; redraws derive fresh seeds from it.
    const std::uint64_t seed = attempt == 0 ? spec.seed : derive_seed(spec.seed, 0x5EED0000ULL + static_cast<std::uint64_t>(attempt));
    RowMatrix pts = draw(spec.dim, spec.pairs, seed);
    if (row_rank(pts) == spec.dim) return pts;
  }
  throw RankDeficient("could not draw a spanning vertex set for " + spec.label());
}

// True when conv(others) contains target, others being every row but `skip`.
bool in_hull_of_others(const RowMatrix& pts, Eigen::Index skip) {
  const auto m = pts.rows() - 1;
  const auto n = pts.cols();
  if (m == 0) return false;
  Matrix a(n + 1, m);
  for (Eigen::Index i = 0, col = 0; i < pts.rows(); ++i) {
    if (i == skip) continue;
    a.block(0, col, n, 1) = pts.row(i).transpose();
    a(n, col) = 1.0;
    ++col;
  }
  Vector b(n + 1);
  b.head(n) = pts.row(skip).transpose();
  b(n) = 1.0;
  const LPProblem lp = LPProblem::nonnegative(Vector::Zero(m), std::move(a),
                                              std::vector<RowSense>(static_cast<std::size_t>(n + 1), RowSense::Equal), b);
  return lp_solve(lp).status == LPStatus::Optimal;
}

std::uint64_t binomial(int n, int k) {
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

bool lexicographically_less(const Vector& a, const Vector& b) {
  return std::lexicographical_compare(a.data(), a.data() + a.size(), b.data(), b.data() + b.size());
}

}  // namespace

std::string to_string(Family f) {
  switch (f) {
    case Family::Cube: return "cube";
    case Family::CrossPolytope: return "cross_polytope";
    case Family::RandomSign: return "random_sign";
    case Family::RandomGaussianSymmetric: return "random_gaussian_symmetric";
    case Family::File: return "file";
  }
  return "unknown";
}

Family family_from_string(const std::string& name) {
  for (Family f : {Family::Cube, Family::CrossPolytope, Family::RandomSign, Family::RandomGaussianSymmetric, Family::File}) {
    if (to_string(f) == name) return f;
  }
  throw InvalidArgument("unknown polytope family '" + name + "'");
}

std::string FamilySpec::label() const {
  std::ostringstream out;
  out << to_string(family) << ":n=" << dim;
  if (family == Family::RandomSign || family == Family::RandomGaussianSymmetric) {
    out << ":m=" << pairs << ":seed=" << seed;
  }
  if (family == Family::File) out << ":path=" << path;
  return out.str();
}

Polytope generate(const FamilySpec& spec) {
  if (spec.family == Family::File) return load_polytope_json(spec.path);
  if (spec.dim < 1) throw InvalidArgument("family dimension must be >= 1");
  switch (spec.family) {
    case Family::Cube:
      return Polytope(PointSet::sign_cube(spec.dim), PointSet::from_rows(signed_unit_basis(spec.dim)), true);
    case Family::CrossPolytope:
      return Polytope(PointSet::from_rows(signed_unit_basis(spec.dim)), PointSet::sign_cube(spec.dim), true);
    case Family::RandomSign:
    case Family::RandomGaussianSymmetric: {
      if (spec.pairs < spec.dim) throw InvalidArgument("random families need at least dim vertex pairs: " + spec.label());
      RowMatrix pts = spec.family == Family::RandomSign ? draw_spanning(spec, draw_random_sign)
                                                        : draw_spanning(spec, draw_gaussian_symmetric);
      return Polytope::from_vertices(PointSet::from_rows(std::move(pts)), true);
    }
    case Family::File: break;
  }
  throw InvalidArgument("unhandled family");
}

RowMatrix extreme_points(const RowMatrix& points) {
  if (points.rows() == 0) throw InvalidArgument("extreme_points needs a non-empty list");
  const RowMatrix pts = dedup_rows(points);
  std::vector<Eigen::Index> keep;
  for (Eigen::Index k = 0; k < pts.rows(); ++k) {
    // A point strictly maximizing <., p> over the list is extreme without an LP.
    const Vector p = pts.row(k).transpose();
    const double self = p.squaredNorm();
    double others = -std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 0; i < pts.rows(); ++i) {
      if (i != k) others = std::max(others, pts.row(i).dot(p));
    }
    if (self > others + 1e-12 * std::max(1.0, self) || !in_hull_of_others(pts, k)) keep.push_back(k);
  }
  RowMatrix out(static_cast<Eigen::Index>(keep.size()), pts.cols());
  for (std::size_t i = 0; i < keep.size(); ++i) out.row(static_cast<Eigen::Index>(i)) = pts.row(keep[i]);
  return out;
}

RowMatrix enumerate_facets(const RowMatrix& vertices) {
  const int n = static_cast<int>(vertices.cols());
  const int m = static_cast<int>(vertices.rows());
  if (n > kEnumerationMaxDim || m > kEnumerationMaxVertices) {
    throw Unsupported("facet enumeration is limited to dim <= " + std::to_string(kEnumerationMaxDim) + " and <= " +
                      std::to_string(kEnumerationMaxVertices) + " vertices (got dim " + std::to_string(n) + ", " +
                      std::to_string(m) + " vertices)");
  }
  if (m < n || row_rank(vertices) < n) throw RankDeficient("vertices do not span R^" + std::to_string(n));

  std::vector<Vector> candidates;
  std::vector<int> subset(static_cast<std::size_t>(n));
  std::iota(subset.begin(), subset.end(), 0);
  Matrix system(n, n);
  const Vector ones = Vector::Ones(n);
  const std::uint64_t total = binomial(m, n);
  for (std::uint64_t visited = 0; visited < total; ++visited) {
    for (int r = 0; r < n; ++r) system.row(r) = vertices.row(subset[static_cast<std::size_t>(r)]);
    Eigen::FullPivLU<Matrix> lu(system);
    if (lu.isInvertible()) {
      const Vector a = lu.solve(ones);
      if ((vertices * a).maxCoeff() <= 1.0 + kCoplanarTolerance) candidates.push_back(a);
    }
    // Next n-subset in lexicographic order.
    int i = n - 1;
    while (i >= 0 && subset[static_cast<std::size_t>(i)] == m - n + i) --i;
    if (i < 0) break;
    ++subset[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < n; ++j) subset[static_cast<std::size_t>(j)] = subset[static_cast<std::size_t>(j - 1)] + 1;
  }

  std::sort(candidates.begin(), candidates.end(), lexicographically_less);
  std::vector<bool> merged(candidates.size(), false);
  std::vector<Vector> facets;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (merged[i]) continue;
    facets.push_back(candidates[i]);
    for (std::size_t k = i + 1; k < candidates.size() && candidates[k](0) - candidates[i](0) <= kNormalMergeTolerance; ++k) {
      if (!merged[k] && (candidates[k] - candidates[i]).norm() <= kNormalMergeTolerance) merged[k] = true;
    }
  }
  if (facets.empty()) throw InvalidArgument("no facets found; the origin is not interior to the vertex hull");

  RowMatrix out(static_cast<Eigen::Index>(facets.size()), n);
  for (std::size_t i = 0; i < facets.size(); ++i) out.row(static_cast<Eigen::Index>(i)) = facets[i].transpose();
  return out;
}

std::string to_string(CountMethod m) {
  switch (m) {
    case CountMethod::Analytic: return "analytic";
    case CountMethod::Enumerated: return "enumerated";
    case CountMethod::DualEnumerated: return "dual_enumerated";
  }
  return "unknown";
}

CountMethod count_method_from_string(const std::string& name) {
  for (CountMethod m : {CountMethod::Analytic, CountMethod::Enumerated, CountMethod::DualEnumerated}) {
    if (to_string(m) == name) return m;
  }
  throw InvalidArgument("unknown count method '" + name + "'");
}

CountMethod count_method_for(const Polytope& p) {
  if (!p.has_hrep()) return CountMethod::Enumerated;
  if (!p.has_vrep()) return CountMethod::DualEnumerated;
  return CountMethod::Analytic;
}

FaceCounts face_counts(const Polytope& p) {
  FaceCounts fc;
  fc.method = count_method_for(p);
  if (p.has_vrep()) {
    const auto& v = p.vrep();
    fc.num_vertices = v.is_implicit() ? v.count() : static_cast<double>(extreme_points(v.rows()).rows());
  } else {
    fc.num_vertices = static_cast<double>(enumerate_facets(extreme_points(p.hrep().materialize())).rows());
  }
  if (p.has_hrep()) {
    const auto& h = p.hrep();
    fc.num_facets = h.is_implicit() ? h.count() : static_cast<double>(extreme_points(h.rows()).rows());
  } else {
    fc.num_facets = static_cast<double>(enumerate_facets(extreme_points(p.vrep().materialize())).rows());
  }
  return fc;
}

Polytope with_both_representations(const Polytope& p) {
  auto pruned = [](const PointSet& s) { return s.is_implicit() ? s : PointSet::from_rows(extreme_points(s.rows())); };
  std::optional<VRep> v;
  std::optional<HRep> h;
  if (p.has_vrep()) v = pruned(p.vrep());
  if (p.has_hrep()) h = pruned(p.hrep());
  if (!h) h = PointSet::from_rows(enumerate_facets(v->materialize()));
  if (!v) v = PointSet::from_rows(enumerate_facets(h->materialize()));
  return Polytope(std::move(v), std::move(h), p.symmetric());
}

Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic> incidence(const RowMatrix& vertices, const RowMatrix& normals,
                                                              double tol) {
  if (vertices.cols() != normals.cols()) throw InvalidArgument("incidence needs lists of equal dimension");
  const Matrix dots = vertices * normals.transpose();
  return ((dots.array() - 1.0).abs() <= tol).matrix();
}

}  // namespace vfbound
