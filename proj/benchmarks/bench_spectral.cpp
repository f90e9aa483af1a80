#include <benchmark/benchmark.h>

#include "rpq/spectral.hpp"

namespace {

void BM_Schrodinger(benchmark::State& state) {
  const rpq::Grid1D grid(-10, 10, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(rpq::spectral::schrodinger_spectrum(1.0, grid, 5));
}
BENCHMARK(BM_Schrodinger)->Arg(501)->Arg(2001)->Arg(8001)->Unit(benchmark::kMillisecond);

void BM_KleinGordon(benchmark::State& state) {
  const auto grid = rpq::spectral::default_oscillator_grid(0.1, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(rpq::spectral::kg_oscillator_spectrum(0.1, grid, 4));
}
BENCHMARK(BM_KleinGordon)->Arg(101)->Arg(201)->Arg(401)->Unit(benchmark::kMillisecond);

}  // namespace
