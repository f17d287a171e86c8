#include <benchmark/benchmark.h>

#include "kabar/generators.hpp"
#include "kabar/refine.hpp"
#include "kabar/seed_partition.hpp"

namespace {

void BM_Refine(benchmark::State& state, kabar::RefineMode mode) {
  kabar::Rng rng(4);
  const auto k = static_cast<kabar::BlockId>(state.range(1));
  const kabar::Graph g = kabar::mesh_graph(static_cast<std::size_t>(state.range(0)), rng);
  const kabar::Partition start = kabar::seed_partition(g, k, 0.03, rng);
  kabar::RefineConfig cfg = kabar::RefineConfig::defaults_for(k);
  cfg.mode = mode;
  for (auto _ : state) benchmark::DoNotOptimize(kabar::refine(g, start, cfg));
}
BENCHMARK_CAPTURE(BM_Refine, basic, kabar::RefineMode::Basic)
    ->Args({1000, 4})->Args({4000, 8})->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Refine, advanced, kabar::RefineMode::Advanced)
    ->Args({1000, 4})->Args({4000, 8})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
