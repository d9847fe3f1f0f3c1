#include <benchmark/benchmark.h>

#include "fcd/grid.hpp"
#include "fcd/initial_data.hpp"
#include "fcd/operators.hpp"
#include "fcd/params.hpp"
#include "fcd/solver.hpp"

namespace {

fcd::Field bump(std::size_t n) {
  return fcd::bump_data(fcd::make_grid(40.0, n), 1.0, 2.0);
}

void BM_DiffusionStep(benchmark::State& state) {
  const auto u = bump(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    auto next = fcd::diffusion_step(u, 1.5, 1e-3);
    benchmark::DoNotOptimize(next.samples.data());
  }
}
BENCHMARK(BM_DiffusionStep)->Arg(1024)->Arg(8192)->Arg(32768);

void BM_ConvectionStep(benchmark::State& state) {
  const auto u = bump(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    auto next = fcd::convection_step(u, 1.2, 1e-3, 2.0, 0.9, fcd::FluxScheme::godunov);
    benchmark::DoNotOptimize(next.samples.data());
  }
}
BENCHMARK(BM_ConvectionStep)->Arg(1024)->Arg(8192)->Arg(32768);

void BM_SplitCycle(benchmark::State& state) {
  const auto u0 = bump(static_cast<std::size_t>(state.range(0)));
  fcd::ModelParams params{1.5, 1.2, 1.0};
  fcd::SolverConfig config;
  config.delta = 1e-3;
  config.end_time = 1e-2;
  config.record_times = {1e-2};
  for (auto _ : state) {
    auto snaps = fcd::split_solve(u0, params, config);
    benchmark::DoNotOptimize(snaps.front().samples.data());
  }
}
BENCHMARK(BM_SplitCycle)->Arg(1024)->Arg(8192);

}  // namespace
