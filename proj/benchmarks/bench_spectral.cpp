#include <benchmark/benchmark.h>

#include <random>

#include "fcd/grid.hpp"
#include "fcd/spectral.hpp"

namespace {

fcd::Field noisy_field(std::size_t n) {
  std::mt19937 rng(42);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  fcd::Field u = fcd::make_field(fcd::make_grid(100.0, n));
  for (auto& v : u.samples) v = dist(rng);
  return u;
}

void BM_RoundTrip(benchmark::State& state) {
  const auto u = noisy_field(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    auto back = fcd::from_spectral(fcd::to_spectral(u));
    benchmark::DoNotOptimize(back.samples.data());
  }
}
BENCHMARK(BM_RoundTrip)->Arg(1024)->Arg(8192)->Arg(32768);

}  // namespace

BENCHMARK_MAIN();
