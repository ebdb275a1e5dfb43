#include <benchmark/benchmark.h>

#include "vfbound/combinatorics.hpp"
#include "vfbound/sphere.hpp"

using namespace vfbound;

static void BM_SampleSphere(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto s = sample_sphere(dim, 100000, 1);
    benchmark::DoNotOptimize(s.points.data());
  }
  state.SetItemsProcessed(state.iterations() * 100000);
}
BENCHMARK(BM_SampleSphere)->Arg(3)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);

static void BM_EstimateMstarCube(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  const Polytope cube = generate({Family::Cube, dim, 0, 0, {}});
  const auto sample = sample_sphere(dim, 100000, 2);
  for (auto _ : state) benchmark::DoNotOptimize(estimate_Mstar(cube, sample).value);
}
BENCHMARK(BM_EstimateMstarCube)->Arg(8)->Arg(64)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
