#pragma once

#include <cstddef>
#include <cstdint>

#include "vfbound/polytope.hpp"
#include "vfbound/types.hpp"

namespace vfbound {

inline constexpr std::size_t kDefaultSamples = 100000;
/// Points per independently seeded chunk of a sample.
inline constexpr std::size_t kSampleChunk = 8192;

/// N i.i.d. uniform unit vectors on S^{n-1}, one per row.
struct SphereSample {
  int dim = 0;
  std::size_t count = 0;
  std::uint64_t seed = 0;
  RowMatrix points;
};

/// A Monte Carlo mean: std_error is the sample standard deviation over sqrt(count).
struct Estimate {
  double value = 0.0;
  double std_error = 0.0;
  std::size_t count = 0;
  std::uint64_t seed = 0;
};

/// Independent seed for stream `stream` derived from `seed` (splitmix64 mixing).
/// Chunk k of a sample uses derive_seed(seed, k).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) noexcept;

/// Normalized Gaussian vectors. Gaussians come from Box-Muller on 53-bit
/// uniforms of a mt19937_64 reseeded per chunk, so the result depends only
/// on (dim, count, seed), never on `threads`.
SphereSample sample_sphere(int dim, std::size_t count, std::uint64_t seed, unsigned threads = 1);

/// Mean and standard error of `values`.
Estimate mean_estimate(const Vector& values, std::uint64_t seed);

/// M(P): mean of the gauge over the sample.
Estimate estimate_M(const Polytope& p, const SphereSample& sample);
/// M*(P): mean of the support function over the sample.
Estimate estimate_Mstar(const Polytope& p, const SphereSample& sample);

/// Fraction of the sample with <theta, u> < eps.
Estimate estimate_cap_measure(const VectorRef& u, double eps, const SphereSample& sample);

/// Fraction of the sample with h_P(theta) > t, the complement of {h_P <= t}.
Estimate estimate_sublevel_tail(const Polytope& p, double t, const SphereSample& sample);

/// Lower bound 1 - exp(-n eps^2 / 2) on the cap measure {<theta, u> < eps}.
double concentration_lower_bound(int dim, double eps);

/// Cauchy-Schwarz bound on the standard error of a.value * b.value; valid for correlated estimates.
double product_std_error(const Estimate& a, const Estimate& b) noexcept;

}  // namespace vfbound
