#include <benchmark/benchmark.h>

#include "vfbound/combinatorics.hpp"

using namespace vfbound;

static void BM_EnumerateFacets(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  const int pairs = static_cast<int>(state.range(1));
  const RowMatrix v = generate({Family::RandomGaussianSymmetric, dim, pairs, 9, {}}).vrep().rows();
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_facets(v).rows());
}
BENCHMARK(BM_EnumerateFacets)->Args({4, 8})->Args({6, 10})->Args({6, 12})->Unit(benchmark::kMillisecond);

static void BM_ExtremePoints(benchmark::State& state) {
  const RowMatrix v = generate({Family::RandomSign, 6, static_cast<int>(state.range(0)), 2, {}}).vrep().rows();
  for (auto _ : state) benchmark::DoNotOptimize(extreme_points(v).rows());
}
BENCHMARK(BM_ExtremePoints)->Arg(12)->Arg(24)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
