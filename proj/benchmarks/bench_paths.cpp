#include <benchmark/benchmark.h>

#include "rpq/geometry.hpp"
#include "rpq/paths.hpp"

namespace {

void BM_SampleAndFilter(benchmark::State& state) {
  const auto g = rpq::geometry::minkowski_metric(4);
  const int count = static_cast<int>(state.range(0));
  for (auto _ : state) {
    const auto ensemble = rpq::paths::sample_paths(1, count, 20, g, 1.0);
    benchmark::DoNotOptimize(rpq::paths::admissible_fraction(ensemble, rpq::paths::ArcLength{1.0}, g, 0.1));
  }
  state.SetItemsProcessed(state.iterations() * count);
}
BENCHMARK(BM_SampleAndFilter)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

}  // namespace
