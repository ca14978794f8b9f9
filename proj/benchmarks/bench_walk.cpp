#include <benchmark/benchmark.h>

#include "cyclewalk/analytic.hpp"
#include "cyclewalk/initial_states.hpp"
#include "cyclewalk/spectral.hpp"
#include "cyclewalk/walk.hpp"

using namespace cyclewalk;

static void BM_Step(benchmark::State& state) {
  const CycleParams params(static_cast<int>(state.range(0)));
  WalkState walker = make_single_node(params, 0);
  for (auto _ : state) {
    step_in_place(walker);
    benchmark::DoNotOptimize(walker.amplitudes().data());
  }
  state.SetItemsProcessed(state.iterations() * params.d);
}
BENCHMARK(BM_Step)->Arg(24)->Arg(64)->Arg(256)->Arg(1024);

static void BM_EvolveAveraged(benchmark::State& state) {
  const CycleParams params(24);
  const WalkState start = make_single_node(params, 0);
  const long t_max = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(time_averaged_distribution(start, t_max));
  }
}
BENCHMARK(BM_EvolveAveraged)->Arg(1000)->Arg(10000);

static void BM_SpectralBasisBuild(benchmark::State& state) {
  const CycleParams params(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    SpectralBasis basis(params);
    benchmark::DoNotOptimize(basis.classes().size());
  }
}
BENCHMARK(BM_SpectralBasisBuild)->Arg(24)->Arg(64)->Arg(256);

static void BM_LimitingDistribution(benchmark::State& state) {
  const CycleParams params(static_cast<int>(state.range(0)));
  const SpectralBasis basis(params);
  const WalkState start = make_single_node(params, 0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(limiting_distribution(start, basis));
  }
}
BENCHMARK(BM_LimitingDistribution)->Arg(24)->Arg(64)->Arg(256);

static void BM_AveragedQuadClosedForm(benchmark::State& state) {
  const CycleParams params(24);
  long t = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(averaged_quad(params, 3, 0, t++ % 1000));
  }
}
BENCHMARK(BM_AveragedQuadClosedForm);

BENCHMARK_MAIN();
