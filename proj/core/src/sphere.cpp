#include "vfbound/sphere.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <thread>
#include <vector>

#include "vfbound/errors.hpp"

namespace vfbound {

namespace {

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

class GaussianSource {
 public:
  explicit GaussianSource(std::uint64_t seed) : engine_(seed) {}

  double next() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u1 = 0.0;
    do {
      u1 = uniform();
    } while (u1 == 0.0);
    const double u2 = uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
  }

 private:
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

void fill_chunk(RowMatrix& points, std::size_t chunk, std::uint64_t seed) {
  const auto begin = static_cast<Eigen::Index>(chunk * kSampleChunk);
  const auto end = std::min<Eigen::Index>(begin + static_cast<Eigen::Index>(kSampleChunk), points.rows());
  GaussianSource gauss(derive_seed(seed, chunk));
  const auto dim = points.cols();
  for (Eigen::Index k = begin; k < end; ++k) {
    double norm = 0.0;
    while (norm == 0.0) {
      for (Eigen::Index j = 0; j < dim; ++j) points(k, j) = gauss.next();
      norm = points.row(k).norm();
    }
    points.row(k) /= norm;
  }
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) noexcept {
  return splitmix64(splitmix64(seed) ^ (stream + 1) * 0xD1B54A32D192ED03ULL);
}

SphereSample sample_sphere(int dim, std::size_t count, std::uint64_t seed, unsigned threads) {
  if (dim < 1) throw InvalidArgument("sphere dimension must be >= 1");
  if (count < 1) throw InvalidArgument("sample count must be >= 1");
  SphereSample s;
  s.dim = dim;
  s.count = count;
  s.seed = seed;
  s.points.resize(static_cast<Eigen::Index>(count), dim);
  const std::size_t chunks = (count + kSampleChunk - 1) / kSampleChunk;
  const std::size_t workers = std::clamp<std::size_t>(threads, 1, chunks);
  if (workers == 1) {
    for (std::size_t c = 0; c < chunks; ++c) fill_chunk(s.points, c, seed);
    return s;
  }
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t c = w; c < chunks; c += workers) fill_chunk(s.points, c, seed);
    });
  }
  return s;
}

Estimate mean_estimate(const Vector& values, std::uint64_t seed) {
  if (values.size() == 0) throw InvalidArgument("cannot estimate a mean from zero values");
  Estimate e;
  e.count = static_cast<std::size_t>(values.size());
  e.seed = seed;
  e.value = values.mean();
  if (values.size() > 1) {
    const double ss = (values.array() - e.value).square().sum();
    const double sd = std::sqrt(ss / static_cast<double>(values.size() - 1));
    e.std_error = sd / std::sqrt(static_cast<double>(values.size()));
  }
  return e;
}

Estimate estimate_M(const Polytope& p, const SphereSample& sample) {
  if (sample.dim != p.dim()) throw InvalidArgument("sample dimension does not match polytope dimension");
  return mean_estimate(gauge_rows(p, sample.points), sample.seed);
}

Estimate estimate_Mstar(const Polytope& p, const SphereSample& sample) {
  if (sample.dim != p.dim()) throw InvalidArgument("sample dimension does not match polytope dimension");
  return mean_estimate(support_rows(p, sample.points), sample.seed);
}

Estimate estimate_cap_measure(const VectorRef& u, double eps, const SphereSample& sample) {
  if (u.size() != sample.dim) throw InvalidArgument("direction length does not match sample dimension");
  if (std::abs(u.norm() - 1.0) > 1e-9) throw InvalidArgument("cap direction must be a unit vector");
  const Vector dots = sample.points * u;
  const Vector inside = (dots.array() < eps).cast<double>();
  return mean_estimate(inside, sample.seed);
}

Estimate estimate_sublevel_tail(const Polytope& p, double t, const SphereSample& sample) {
  if (!(t > 0.0)) throw InvalidArgument("sublevel threshold must be positive");
  if (sample.dim != p.dim()) throw InvalidArgument("sample dimension does not match polytope dimension");
  const Vector h = support_rows(p, sample.points);
  const Vector above = (h.array() > t).cast<double>();
  return mean_estimate(above, sample.seed);
}

double concentration_lower_bound(int dim, double eps) { return 1.0 - std::exp(-0.5 * dim * eps * eps); }

double product_std_error(const Estimate& a, const Estimate& b) noexcept {
  return std::abs(a.value) * b.std_error + std::abs(b.value) * a.std_error;
}

}  // namespace vfbound
