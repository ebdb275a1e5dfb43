#include <benchmark/benchmark.h>

#include "vfbound/combinatorics.hpp"
#include "vfbound/john.hpp"
#include "vfbound/polytope.hpp"
#include "vfbound/sphere.hpp"

using namespace vfbound;

namespace {

Polytope gaussian(int dim, int pairs) { return generate({Family::RandomGaussianSymmetric, dim, pairs, 5, {}}); }

}  // namespace

static void BM_SupportRows(benchmark::State& state) {
  const Polytope p = gaussian(6, static_cast<int>(state.range(0)));
  const auto sample = sample_sphere(6, 100000, 3);
  for (auto _ : state) benchmark::DoNotOptimize(support_rows(p, sample.points).data());
}
BENCHMARK(BM_SupportRows)->Arg(8)->Arg(64)->Unit(benchmark::kMillisecond);

// Gauge of a vertex-only polytope, one LP per point.
static void BM_GaugeByLp(benchmark::State& state) {
  const Polytope p = gaussian(6, static_cast<int>(state.range(0)));
  const RowMatrix v = p.vrep().rows();
  const auto sample = sample_sphere(6, 64, 4);
  for (auto _ : state) {
    for (Eigen::Index i = 0; i < sample.points.rows(); ++i) {
      benchmark::DoNotOptimize(gauge_by_lp(v, sample.points.row(i).transpose()));
    }
  }
  state.SetItemsProcessed(state.iterations() * 64);
}
BENCHMARK(BM_GaugeByLp)->Arg(8)->Arg(32);

static void BM_Mvee(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  const RowMatrix v = gaussian(dim, 4 * dim).vrep().rows();
  for (auto _ : state) benchmark::DoNotOptimize(mvee_symmetric(v).gap);
}
BENCHMARK(BM_Mvee)->Arg(4)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
