#include <cmath>

#include <benchmark/benchmark.h>

#include "rpq/propagator.hpp"

namespace {

using namespace rpq::propagator;

void BM_KernelBuild(benchmark::State& state) {
  const rpq::Grid1D grid(-8, 8, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(short_time_kernel(OscillatorModel{}, grid, 0.05));
}
BENCHMARK(BM_KernelBuild)->Arg(201)->Arg(801)->Unit(benchmark::kMillisecond);

void BM_Evolve(benchmark::State& state) {
  const rpq::Grid1D grid(-8, 8, static_cast<int>(state.range(0)));
  const auto kernel = short_time_kernel(OscillatorModel{}, grid, 0.05);
  const auto f = GridFunction::sample(grid, [](double x) { return std::exp(-x * x / 2); });
  for (auto _ : state) benchmark::DoNotOptimize(evolve(kernel, f, 20));
}
BENCHMARK(BM_Evolve)->Arg(201)->Arg(801)->Unit(benchmark::kMillisecond);

void BM_Oracle(benchmark::State& state) {
  const rpq::Grid1D grid(-8, 8, static_cast<int>(state.range(0)));
  const auto f = GridFunction::sample(grid, [](double x) { return std::exp(-x * x / 2); });
  for (auto _ : state) benchmark::DoNotOptimize(oracle_evolution(OscillatorModel{}, f, 1.0));
}
BENCHMARK(BM_Oracle)->Arg(201)->Arg(801)->Unit(benchmark::kMillisecond);

}  // namespace
