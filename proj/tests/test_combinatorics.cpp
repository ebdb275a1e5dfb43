#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "vfbound/combinatorics.hpp"
#include "vfbound/errors.hpp"

using namespace vfbound;

namespace {

FamilySpec spec(Family f, int n, int m = 0, std::uint64_t seed = 0) { return {f, n, m, seed, {}}; }

bool contains_row(const RowMatrix& m, const Vector& v) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    if ((m.row(i).transpose() - v).norm() <= 1e-9) return true;
  return false;
}

}  // namespace

TEST_CASE("generated families have the expected sizes") {
  const Polytope c = generate(spec(Family::Cube, 3));
  CHECK(c.vrep().count() == 8);
  CHECK(c.hrep().count() == 6);
  const Polytope x = generate(spec(Family::CrossPolytope, 4));
  CHECK(x.vrep().count() == 8);
  CHECK(x.hrep().count() == 16);

  const Polytope g = generate(spec(Family::RandomGaussianSymmetric, 3, 10, 4));
  const RowMatrix& v = g.vrep().rows();
  CHECK(v.rows() == 20);
  CHECK(((v.rowwise().norm().array() - 1.0).abs() <= 1e-12).all());
  CHECK(closed_under_negation(v));

  const Polytope s = generate(spec(Family::RandomSign, 4, 6, 2));
  CHECK(s.vrep().max_norm() == doctest::Approx(1.0));
  CHECK(closed_under_negation(s.vrep().rows()));
  CHECK(row_rank(s.vrep().rows()) == 4);
}

TEST_CASE("generation is deterministic per seed") {
  const auto a = generate(spec(Family::RandomGaussianSymmetric, 5, 8, 11)).vrep().rows();
  const auto b = generate(spec(Family::RandomGaussianSymmetric, 5, 8, 11)).vrep().rows();
  const auto c = generate(spec(Family::RandomGaussianSymmetric, 5, 8, 12)).vrep().rows();
  CHECK(a == b);
  CHECK(a != c);
  CHECK(generate(spec(Family::RandomSign, 5, 9, 3)).vrep().rows() ==
        generate(spec(Family::RandomSign, 5, 9, 3)).vrep().rows());
}

TEST_CASE("invalid family specs") {
  CHECK_THROWS_AS(generate(spec(Family::RandomSign, 5, 3, 1)), InvalidArgument);
  CHECK_THROWS_AS(generate(spec(Family::Cube, 0)), InvalidArgument);
  CHECK_THROWS_AS(family_from_string("simplex"), InvalidArgument);
  CHECK(family_from_string("random_gaussian_symmetric") == Family::RandomGaussianSymmetric);
  CHECK(spec(Family::RandomSign, 6, 10, 3).label() == "random_sign:n=6:m=10:seed=3");
  CHECK(spec(Family::Cube, 4).label() == "cube:n=4");
}

TEST_CASE("extreme points drop the origin") {
  RowMatrix pts(7, 3);
  pts << 1, 0, 0, -1, 0, 0, 0, 1, 0, 0, -1, 0, 0, 0, 1, 0, 0, -1, 0, 0, 0;
  const RowMatrix ext = extreme_points(pts);
  CHECK(ext.rows() == 6);
  CHECK(!contains_row(ext, Vector::Zero(3)));
}

TEST_CASE("extreme points keep every cube vertex") {
  const RowMatrix v = generate(spec(Family::Cube, 3)).vrep().materialize();
  CHECK(extreme_points(v).rows() == 8);
}

TEST_CASE("extreme points remove a duplicate and a midpoint") {
  RowMatrix pts = oracle::random_symmetric_unit_points(3, 10, 8);
  RowMatrix aug(pts.rows() + 2, 3);
  aug.topRows(pts.rows()) = pts;
  aug.row(pts.rows()) = pts.row(3);
  const Vector mid = 0.5 * (pts.row(0) + pts.row(1)).transpose();
  aug.row(pts.rows() + 1) = mid.transpose();
  const RowMatrix ext = extreme_points(aug);
  CHECK(ext.rows() == 20);
  CHECK(!contains_row(ext, mid));
}

TEST_CASE("facets of the cross-polytope and the cube") {
  const RowMatrix x = enumerate_facets(generate(spec(Family::CrossPolytope, 4)).vrep().rows());
  CHECK(x.rows() == 16);
  CHECK((x.array().abs() == 1.0).all());

  const RowMatrix c = enumerate_facets(generate(spec(Family::Cube, 3)).vrep().materialize());
  CHECK(c.rows() == 6);
  for (int i = 0; i < 3; ++i) {
    CHECK(contains_row(c, Vector::Unit(3, i)));
    CHECK(contains_row(c, -Vector::Unit(3, i)));
  }
}

TEST_CASE("facets of random points in R^3 match the brute-force oracle and Euler's relation") {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    const RowMatrix v = oracle::random_symmetric_unit_points(3, 5, seed);
    const auto facets = enumerate_facets(v);
    CHECK(static_cast<std::size_t>(facets.rows()) == oracle::facet_count_by_incidence(v));
    // Simplicial 3-polytope: F = 2V - 4.
    CHECK(facets.rows() == 2 * v.rows() - 4);
  }
}

TEST_CASE("every enumerated facet is supporting and tight at n vertices") {
  const RowMatrix v = generate(spec(Family::RandomSign, 5, 12, 4)).vrep().rows();
  const RowMatrix f = enumerate_facets(v);
  CHECK(f.rows() % 2 == 0);
  CHECK(closed_under_negation(f, 1e-7));
  const Matrix dots = v * f.transpose();
  for (Eigen::Index j = 0; j < f.rows(); ++j) {
    CHECK(dots.col(j).maxCoeff() == doctest::Approx(1.0).epsilon(1e-7));
    CHECK(((dots.col(j).array() - 1.0).abs() <= 1e-7).count() >= 5);
  }
  // Non-simplicial sign facets are merged: the count matches the oracle.
  CHECK(static_cast<std::size_t>(f.rows()) == oracle::facet_count_by_incidence(v));
}

TEST_CASE("enumeration limits and degenerate inputs") {
  CHECK_THROWS_AS(enumerate_facets(generate(spec(Family::Cube, 8)).vrep().materialize()), Unsupported);
  CHECK_THROWS_AS(enumerate_facets(oracle::random_symmetric_unit_points(3, 13, 1)), Unsupported);
  RowMatrix flat(4, 3);
  flat << 1, 0, 0, -1, 0, 0, 0, 1, 0, 0, -1, 0;
  CHECK_THROWS_AS(enumerate_facets(flat), RankDeficient);
}

TEST_CASE("face counts") {
  auto fc = face_counts(generate(spec(Family::Cube, 16)));
  CHECK(fc.num_vertices == 65536);
  CHECK(fc.num_facets == 32);
  CHECK(fc.method == CountMethod::Analytic);

  fc = face_counts(generate(spec(Family::CrossPolytope, 6)));
  CHECK(fc.num_vertices == 12);
  CHECK(fc.num_facets == 64);

  fc = face_counts(generate(spec(Family::Cube, 64)));
  CHECK(fc.num_vertices == std::ldexp(1.0, 64));
  CHECK(fc.num_facets == 128);

  const Polytope rs = generate(spec(Family::RandomSign, 5, 12, 7));
  fc = face_counts(rs);
  CHECK(fc.method == CountMethod::Enumerated);
  CHECK(fc.num_vertices == rs.vrep().rows().rows());
  CHECK(static_cast<std::size_t>(fc.num_facets) == oracle::facet_count_by_incidence(rs.vrep().rows()));

  const Polytope honly = Polytope::from_normals(PointSet::from_rows(rs.vrep().rows()), true);
  const auto dual = face_counts(honly);
  CHECK(dual.method == CountMethod::DualEnumerated);
  CHECK(dual.num_vertices == fc.num_facets);
  CHECK(dual.num_facets == fc.num_vertices);

  CHECK_THROWS_AS(face_counts(Polytope::from_vertices(PointSet::from_rows(oracle::random_symmetric_unit_points(9, 9, 1)), true)),
                  Unsupported);
}

TEST_CASE("count duality and parity on symmetric families") {
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    const Polytope p = with_both_representations(generate(spec(Family::RandomGaussianSymmetric, 4, 7, seed)));
    const auto a = face_counts(p);
    const auto b = face_counts(polar_dual(p));
    CHECK(a.num_facets == b.num_vertices);
    CHECK(a.num_vertices == b.num_facets);
    CHECK(std::fmod(a.num_vertices, 2.0) == 0.0);
    CHECK(std::fmod(a.num_facets, 2.0) == 0.0);
    CHECK(a.num_vertices >= 5);
    CHECK(a.num_facets >= 5);
  }
}
