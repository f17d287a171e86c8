#include <benchmark/benchmark.h>

#include "kabar/cycle_solver.hpp"

namespace {

kabar::ModelGraph random_model(std::size_t n, std::size_t degree, kabar::EdgeWeight lo,
                               kabar::EdgeWeight hi, kabar::Rng& rng) {
  kabar::ModelGraph mg(n);
  for (kabar::ModelNode u = 0; u < n; ++u) {
    for (std::size_t i = 0; i < degree; ++i) {
      const auto v = static_cast<kabar::ModelNode>(rng.index(n));
      if (v != u) mg.add_edge(u, v, rng.range(lo, hi));
    }
  }
  return mg;
}

void BM_DetectNegativeCycle(benchmark::State& state) {
  kabar::Rng rng(1);
  const auto mg = random_model(static_cast<std::size_t>(state.range(0)), 6, -2, 10, rng);
  for (auto _ : state) benchmark::DoNotOptimize(kabar::detect_negative_cycle(mg, 0));
}
BENCHMARK(BM_DetectNegativeCycle)->Arg(64)->Arg(512)->Arg(4096);

void BM_ShortestPathTree(benchmark::State& state) {
  kabar::Rng rng(2);
  const auto mg = random_model(static_cast<std::size_t>(state.range(0)), 6, 0, 10, rng);
  for (auto _ : state) benchmark::DoNotOptimize(kabar::shortest_path_tree(mg, 0));
}
BENCHMARK(BM_ShortestPathTree)->Arg(64)->Arg(512)->Arg(4096);

void BM_ZeroWeightCycle(benchmark::State& state) {
  kabar::Rng rng(3);
  const auto mg = random_model(static_cast<std::size_t>(state.range(0)), 6, 0, 2, rng);
  const kabar::Potentials pi = kabar::shortest_path_tree(mg, 0);
  for (auto _ : state) benchmark::DoNotOptimize(kabar::find_zero_weight_cycle(mg, pi, rng));
}
BENCHMARK(BM_ZeroWeightCycle)->Arg(64)->Arg(512)->Arg(4096);

}  // namespace

BENCHMARK_MAIN();
