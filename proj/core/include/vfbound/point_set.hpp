#pragma once

#include <cstddef>
#include <cstdint>
#include <variant>

#include "vfbound/types.hpp"

namespace vfbound {

/// Euclidean distance under which two points are considered the same vertex.
inline constexpr double kDedupTolerance = 1e-9;

/// Largest implicit point set that materialize() will expand.
inline constexpr std::size_t kMaterializeLimit = std::size_t{1} << 20;

/// A finite list of points in R^n.
///
/// Either an explicit row matrix, or the implicit scaled sign cube
/// {-s, +s}^n, which is what lets cubes and cross-polytopes in dimension 64
/// carry both representations: max over the sign cube of <p, x> is s*|x|_1.
class PointSet {
 public:
  static PointSet from_rows(RowMatrix points);
  static PointSet sign_cube(int dim, double scale = 1.0);

  int dim() const noexcept { return dim_; }
  /// Number of points. Exact for all explicit sets and for 2^n up to n = 1023.
  double count() const noexcept;
  /// Natural log of count(), computed without overflow for implicit sets.
  double log_count() const noexcept;
  bool is_implicit() const noexcept { return std::holds_alternative<SignCube>(data_); }
  /// Scale s of an implicit sign cube; throws for explicit sets.
  double sign_cube_scale() const;

  /// Explicit rows; throws Unsupported for implicit sets.
  const RowMatrix& rows() const;
  /// Rows for either kind; implicit sets are expanded in lexicographic sign order.
  RowMatrix materialize(std::size_t limit = kMaterializeLimit) const;

  /// max_p <p, x>
  double max_dot(const VectorRef& x) const;
  /// max_p <p, x_k> for every row x_k of xs; evaluated in row blocks.
  Vector max_dot_rows(const RowMatrix& xs) const;
  /// max_p |p|
  double max_norm() const;
  /// {M p}; implicit sets stay implicit when M is a positive multiple of I.
  PointSet mapped(const Matrix& m) const;

 private:
  struct SignCube {
    double scale;
  };
  PointSet(int dim, std::variant<RowMatrix, SignCube> data) : dim_(dim), data_(std::move(data)) {}

  int dim_;
  std::variant<RowMatrix, SignCube> data_;
};

/// Removes points within `tol` of an earlier point, keeping first occurrences.
RowMatrix dedup_rows(const RowMatrix& points, double tol = kDedupTolerance);

/// True if every row has its negation in the list, within `tol`.
bool closed_under_negation(const RowMatrix& points, double tol = kDedupTolerance);

/// Numerical rank of the row set.
int row_rank(const RowMatrix& points, double tol = 1e-9);

}  // namespace vfbound
