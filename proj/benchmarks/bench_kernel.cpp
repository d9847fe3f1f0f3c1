#include <benchmark/benchmark.h>

#include "fcd/kernel.hpp"

namespace {

void BM_KernelValue(benchmark::State& state) {
  const double alpha = static_cast<double>(state.range(0)) / 10.0;
  double x = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(fcd::kernel_value(alpha, 1.0, x));
    x += 0.37;
    if (x > 50.0) x = 0.0;
  }
}
BENCHMARK(BM_KernelValue)->Arg(11)->Arg(15)->Arg(19);

void BM_ProfileBuild(benchmark::State& state) {
  for (auto _ : state) {
    auto profile = fcd::build_kernel_profile(1.5);
    benchmark::DoNotOptimize(profile.values().data());
  }
}
BENCHMARK(BM_ProfileBuild);

void BM_ProfileLookup(benchmark::State& state) {
  const auto profile = fcd::build_kernel_profile(1.5);
  double r = 1e-3;
  for (auto _ : state) {
    benchmark::DoNotOptimize(profile.value(r));
    r *= 1.01;
    if (r > 300.0) r = 1e-3;
  }
}
BENCHMARK(BM_ProfileLookup);

}  // namespace
