#include <cmath>
#include <numbers>

#include <benchmark/benchmark.h>

#include "rpq/geometry.hpp"
#include "rpq/maxwell.hpp"
#include "rpq/modes.hpp"

namespace {

using rpq::modes::FieldConfig;
using rpq::modes::PeriodicGrid;

FieldConfig wave_potential(int n) {
  const PeriodicGrid grid(3, n, 2 * std::numbers::pi);
  FieldConfig xi{grid, grid.spacing() / 2, 4, {}};
  for (int t = 0; t < 5; ++t) {
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(4, grid.size());
    for (int p = 0; p < grid.size(); ++p) m(2, p) = std::sin(t * xi.time_step - grid.coordinate(p, 0));
    xi.frames.push_back(std::move(m));
  }
  return xi;
}

void BM_JacobiStreaming(benchmark::State& state) {
  const auto xi = wave_potential(static_cast<int>(state.range(0)));
  const auto g = rpq::geometry::minkowski_metric(4);
  const auto f = rpq::maxwell::field_tensor(xi, g);
  for (auto _ : state) benchmark::DoNotOptimize(rpq::maxwell::jacobi_residual(f, g));
}
BENCHMARK(BM_JacobiStreaming)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

void BM_Decompose(benchmark::State& state) {
  const auto xi = wave_potential(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(rpq::modes::decompose(xi));
}
BENCHMARK(BM_Decompose)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

void BM_WaveSolve(benchmark::State& state) {
  const PeriodicGrid grid(3, static_cast<int>(state.range(0)), 2 * std::numbers::pi);
  Eigen::MatrixXd init(1, grid.size());
  for (int p = 0; p < grid.size(); ++p) init(0, p) = std::sin(grid.coordinate(p, 0));
  const Eigen::MatrixXd vel = Eigen::MatrixXd::Zero(1, grid.size());
  const double dt = 0.5 * grid.spacing() / std::sqrt(3.0);
  for (auto _ : state) benchmark::DoNotOptimize(rpq::modes::wave_solve(grid, dt, init, vel, 100));
}
BENCHMARK(BM_WaveSolve)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

}  // namespace
