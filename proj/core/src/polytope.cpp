#include "vfbound/polytope.hpp"

#include <cmath>
#include <sstream>

#include "vfbound/errors.hpp"
#include "vfbound/lp.hpp"

namespace vfbound {

namespace {

constexpr std::size_t kValidateLimit = std::size_t{1} << 12;

std::optional<RowMatrix> rows_for_validation(const PointSet& s) {
  if (!s.is_implicit()) return s.rows();
  if (s.dim() < 63 && (std::size_t{1} << s.dim()) <= kValidateLimit) return s.materialize();
  return std::nullopt;
}

// Largest s such that 0 = sum lambda_i p_i with sum lambda = 1 and every lambda_i >= s.
// Positive exactly when the origin lies in the relative interior of conv(points).
double interior_margin(const RowMatrix& points) {
  const auto m = points.rows();
  const auto n = points.cols();
  Matrix a = Matrix::Zero(n + 1 + m, m + 1);
  Vector b = Vector::Zero(n + 1 + m);
  std::vector<RowSense> senses;
  a.topLeftCorner(n, m) = points.transpose();
  senses.assign(static_cast<std::size_t>(n), RowSense::Equal);
  a.block(n, 0, 1, m).setOnes();
  b(n) = 1.0;
  senses.push_back(RowSense::Equal);
  for (Eigen::Index i = 0; i < m; ++i) {
    a(n + 1 + i, i) = 1.0;
    a(n + 1 + i, m) = -1.0;
    senses.push_back(RowSense::GreaterEqual);
  }
  Vector c = Vector::Zero(m + 1);
  c(m) = -1.0;
  LPProblem lp = LPProblem::nonnegative(c, a, senses, b);
  lp.lower(m) = -1.0;
  lp.upper(m) = 1.0;
  const LPResult res = lp_solve(lp);
  if (res.status != LPStatus::Optimal) return -1.0;
  return res.solution(m);
}

}  // namespace

Polytope::Polytope(std::optional<VRep> vertices, std::optional<HRep> normals, bool symmetric)
    : vertices_(std::move(vertices)), normals_(std::move(normals)), symmetric_(symmetric) {
  if (!vertices_ && !normals_) throw InvalidArgument("polytope needs a vertex list or a halfspace list");
  if (vertices_ && normals_ && vertices_->dim() != normals_->dim()) {
    throw InvalidArgument("vertex and halfspace representations have different dimensions");
  }
  dim_ = vertices_ ? vertices_->dim() : normals_->dim();
  if (vertices_) circumradius_ = vertices_->max_norm();
  if (normals_) {
    const double a = normals_->max_norm();
    if (a > 0.0) inradius_ = 1.0 / a;
  }
}

const VRep& Polytope::vrep() const {
  if (!vertices_) throw RepresentationUnavailable("polytope has no vertex representation");
  return *vertices_;
}

const HRep& Polytope::hrep() const {
  if (!normals_) throw RepresentationUnavailable("polytope has no halfspace representation");
  return *normals_;
}

double support(const Polytope& p, const VectorRef& x) { return p.vrep().max_dot(x); }

Vector support_rows(const Polytope& p, const RowMatrix& xs) { return p.vrep().max_dot_rows(xs); }

double gauge_by_lp(const RowMatrix& vertices, const VectorRef& x) {
  if (x.size() != vertices.cols()) throw InvalidArgument("vector length does not match polytope dimension");
  const auto m = vertices.rows();
  const auto n = vertices.cols();
  LPProblem lp = LPProblem::nonnegative(Vector::Ones(m), vertices.transpose(),
                                        std::vector<RowSense>(static_cast<std::size_t>(n), RowSense::Equal), x);
  const LPResult res = lp_solve(lp);
  if (res.status != LPStatus::Optimal) {
    throw InternalConsistency("gauge LP has no optimum; the origin is not interior to the vertex hull");
  }
  return res.objective;
}

double gauge(const Polytope& p, const VectorRef& x) {
  if (x.size() != p.dim()) throw InvalidArgument("vector length does not match polytope dimension");
  if (p.has_hrep()) return p.hrep().max_dot(x);
  if (!p.symmetric()) {
    throw Unsupported("gauge of a non-symmetric polytope needs a halfspace representation");
  }
  return gauge_by_lp(p.vrep().materialize(), x);
}

Vector gauge_rows(const Polytope& p, const RowMatrix& xs) {
  if (p.has_hrep()) return p.hrep().max_dot_rows(xs);
  if (xs.cols() != p.dim()) throw InvalidArgument("sample dimension does not match polytope dimension");
  if (!p.symmetric()) {
    throw Unsupported("gauge of a non-symmetric polytope needs a halfspace representation");
  }
  const RowMatrix v = p.vrep().materialize();
  Vector out(xs.rows());
  for (Eigen::Index k = 0; k < xs.rows(); ++k) out(k) = gauge_by_lp(v, xs.row(k).transpose());
  return out;
}

Polytope polar_dual(const Polytope& p) {
  std::optional<VRep> v;
  std::optional<HRep> h;
  if (p.has_hrep()) v = p.hrep();
  if (p.has_vrep()) h = p.vrep();
  return Polytope(std::move(v), std::move(h), p.symmetric());
}

double circumradius(const Polytope& p) {
  if (auto r = p.cached_circumradius()) return *r;
  throw RepresentationUnavailable("circumradius needs a vertex representation");
}

double inradius(const Polytope& p) {
  if (auto r = p.cached_inradius()) return *r;
  if (!p.has_hrep()) throw RepresentationUnavailable("inradius needs a halfspace representation");
  throw InvalidArgument("halfspace representation has only zero normals");
}

std::string to_string(Violation::Kind kind) {
  switch (kind) {
    case Violation::Kind::Duplicate: return "duplicate";
    case Violation::Kind::Symmetry: return "symmetry";
    case Violation::Kind::ZeroNormal: return "zero-normal";
    case Violation::Kind::OriginNotInterior: return "origin-not-interior";
    case Violation::Kind::Unbounded: return "unbounded";
    case Violation::Kind::Containment: return "containment";
    case Violation::Kind::Tightness: return "tightness";
  }
  return "unknown";
}

std::vector<Violation> validate(const Polytope& p) {
  std::vector<Violation> out;
  const int n = p.dim();
  auto report = [&](Violation::Kind kind, const std::string& msg) { out.push_back({kind, msg}); };

  std::optional<RowMatrix> verts;
  std::optional<RowMatrix> normals;
  if (p.has_vrep()) verts = rows_for_validation(p.vrep());
  if (p.has_hrep()) normals = rows_for_validation(p.hrep());

  if (verts) {
    const auto kept = dedup_rows(*verts).rows();
    if (kept != verts->rows()) {
      report(Violation::Kind::Duplicate, std::to_string(verts->rows() - kept) + " duplicate vertices");
    }
    if (p.symmetric() && !closed_under_negation(*verts)) {
      report(Violation::Kind::Symmetry, "vertex list is not closed under negation");
    }
    if (row_rank(*verts) < n) {
      report(Violation::Kind::OriginNotInterior, "vertices do not span R^" + std::to_string(n));
    } else if (!p.symmetric() && interior_margin(*verts) <= 1e-12) {
      report(Violation::Kind::OriginNotInterior, "origin is not interior to the vertex hull");
    }
  }

  if (normals) {
    const Vector norms = normals->rowwise().norm();
    for (Eigen::Index i = 0; i < norms.size(); ++i) {
      if (norms(i) <= 1e-12) report(Violation::Kind::ZeroNormal, "normal " + std::to_string(i) + " is zero");
    }
    if (p.symmetric() && !closed_under_negation(*normals)) {
      report(Violation::Kind::Symmetry, "normal list is not closed under negation");
    }
    if (row_rank(*normals) < n || (!p.symmetric() && interior_margin(*normals) <= 1e-12)) {
      report(Violation::Kind::Unbounded, "halfspaces do not bound a polytope");
    }
  }

  if (verts && normals) {
    const Matrix dots = *verts * normals->transpose();
    const double worst = dots.maxCoeff();
    if (worst > 1.0 + kConsistencyTolerance) {
      std::ostringstream msg;
      msg << "a vertex violates a halfspace: max <a, v> = " << worst;
      report(Violation::Kind::Containment, msg.str());
    }
    for (Eigen::Index j = 0; j < dots.cols(); ++j) {
      std::vector<Eigen::Index> tight;
      for (Eigen::Index i = 0; i < dots.rows(); ++i) {
        if (std::abs(dots(i, j) - 1.0) <= kConsistencyTolerance) tight.push_back(i);
      }
      RowMatrix on_face(static_cast<Eigen::Index>(tight.size()), n);
      for (std::size_t k = 0; k < tight.size(); ++k) on_face.row(static_cast<Eigen::Index>(k)) = verts->row(tight[k]);
      if (row_rank(on_face, 1e-7) < n) {
        report(Violation::Kind::Tightness,
               "halfspace " + std::to_string(j) + " is tight at fewer than n affinely independent vertices");
      }
    }
  }
  return out;
}

}  // namespace vfbound
