#include <gtest/gtest.h>

#include "kabar/cycle_solver.hpp"
#include "oracles.hpp"

namespace kabar {
namespace {

// Digraph free of negative cycles: reduced weights c(u,v) >= 0 shifted by
// random potentials. Cycles of zero reduced weight become zero cycles.
ModelGraph potential_digraph(std::size_t n, double density, Rng& rng) {
  std::vector<EdgeWeight> phi(n);
  for (auto& x : phi) x = rng.range(-3, 3);
  ModelGraph mg(n);
  for (ModelNode u = 0; u < n; ++u) {
    for (ModelNode v = 0; v < n; ++v) {
      if (u == v || rng.uniform(0, 1) >= density) continue;
      const EdgeWeight c = rng.coin() ? 0 : rng.range(0, 2);
      mg.add_edge(u, v, c + phi[u] - phi[v]);
    }
  }
  return mg;
}

TEST(NegativeCycle, AllNegativeTriangle) {
  ModelGraph mg(4);
  const ModelNode s = 3;
  mg.add_edge(0, 1, -1);
  mg.add_edge(1, 2, -1);
  mg.add_edge(2, 0, -1);
  for (ModelNode v = 0; v < 3; ++v) mg.add_edge(s, v, 0);
  const auto c = detect_negative_cycle(mg, s);
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(c->weight, -3);
  EXPECT_EQ(c->edges.size(), 3u);
  EXPECT_TRUE(oracle::is_closed_walk(mg, c->edges));
}

TEST(NegativeCycle, NonNegativeWeightsHaveNone) {
  Rng rng(1);
  for (int i = 0; i < 50; ++i) {
    const ModelGraph mg = oracle::random_digraph(8, 0.4, 0, 3, rng);
    EXPECT_FALSE(detect_negative_cycle(mg, 0).has_value());
  }
}

TEST(NegativeCycle, UnreachableCycleIsIgnored) {
  ModelGraph mg(3);
  mg.add_edge(1, 2, -1);
  mg.add_edge(2, 1, -1);
  EXPECT_FALSE(detect_negative_cycle(mg, 0).has_value());
}

TEST(NegativeCycle, RemovedEdgesAreIgnored) {
  ModelGraph mg(2);
  mg.add_edge(0, 1, -1);
  const ModelEdgeId back = mg.add_edge(1, 0, -1);
  EXPECT_TRUE(detect_negative_cycle(mg, 0).has_value());
  mg.remove_edge(back);
  EXPECT_FALSE(detect_negative_cycle(mg, 0).has_value());
  EXPECT_EQ(mg.num_active_edges(), 1u);
}

TEST(NegativeCycle, AgreesWithSimpleCycleEnumeration) {
  Rng rng(2024);
  int with_cycle = 0;
  for (int i = 0; i < 400; ++i) {
    const std::size_t n = 2 + rng.index(7);
    const ModelGraph mg = oracle::random_digraph(n, rng.uniform(0.15, 0.6), -3, 3, rng);
    const auto s = static_cast<ModelNode>(rng.index(n));
    const bool expected = oracle::has_reachable_negative_cycle(mg, s);
    const auto c = detect_negative_cycle(mg, s);
    ASSERT_EQ(c.has_value(), expected) << "instance " << i;
    if (c) {
      ++with_cycle;
      EXPECT_TRUE(oracle::is_closed_walk(mg, c->edges));
      EXPECT_LT(c->weight, 0);
      EXPECT_EQ(c->weight, total_weight(mg, c->edges));
    }
  }
  EXPECT_GT(with_cycle, 50);
}

TEST(ShortestPathTree, StarFromSource) {
  ModelGraph mg(3);
  mg.add_edge(0, 1, 2);
  mg.add_edge(0, 2, -1);
  const Potentials pi = shortest_path_tree(mg, 0);
  EXPECT_EQ(pi.distance(0), 0);
  EXPECT_EQ(pi.distance(1), 2);
  EXPECT_EQ(pi.distance(2), -1);
}

TEST(ShortestPathTree, SingleNode) {
  const ModelGraph mg(1);
  const Potentials pi = shortest_path_tree(mg, 0);
  EXPECT_TRUE(pi.reachable(0));
  EXPECT_EQ(pi.distance(0), 0);
}

TEST(ShortestPathTree, ThrowsOnNegativeCycle) {
  ModelGraph mg(2);
  mg.add_edge(0, 1, 1);
  mg.add_edge(1, 0, -2);
  EXPECT_THROW(shortest_path_tree(mg, 0), NegativeCycleError);
  try {
    shortest_path_tree(mg, 0);
  } catch (const NegativeCycleError& e) {
    EXPECT_EQ(e.cycle().weight, -1);
  }
}

TEST(ShortestPathTree, MatchesExhaustivePathMinimization) {
  Rng rng(77);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 1 + rng.index(10);
    const ModelGraph mg = potential_digraph(n, rng.uniform(0.1, 0.5), rng);
    const Potentials pi = shortest_path_tree(mg, 0);
    for (ModelNode v = 0; v < n; ++v) {
      const auto best = oracle::min_simple_path(mg, 0, v);
      ASSERT_EQ(pi.reachable(v), best.has_value());
      if (!best) continue;
      EXPECT_EQ(pi.distance(v), *best);
      // Reduced costs are nonnegative on reachable edges.
      for (ModelEdgeId e : mg.out_edges(v)) EXPECT_GE(pi.reduced_cost(mg, e), 0);
      if (v != 0) {
        const ModelEdge& parent = mg.edge(pi.parent_edge(v));
        EXPECT_EQ(parent.to, v);
        EXPECT_EQ(pi.distance(parent.from) + parent.weight, pi.distance(v));
      }
    }
  }
}

TEST(ZeroCycle, TwoCycleOfOppositeWeights) {
  ModelGraph mg(3);
  mg.add_edge(0, 1, 0);
  mg.add_edge(1, 2, 4);
  mg.add_edge(2, 1, -4);
  const Potentials pi = shortest_path_tree(mg, 0);
  Rng rng(1);
  const auto c = find_zero_weight_cycle(mg, pi, rng);
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(c->weight, 0);
  EXPECT_EQ(c->edges.size(), 2u);
}

TEST(ZeroCycle, DagHasNone) {
  ModelGraph mg(4);
  mg.add_edge(0, 1, 0);
  mg.add_edge(1, 2, 0);
  mg.add_edge(0, 2, 0);
  mg.add_edge(2, 3, -1);
  const Potentials pi = shortest_path_tree(mg, 0);
  Rng rng(1);
  EXPECT_FALSE(find_zero_weight_cycle(mg, pi, rng).has_value());
}

TEST(ZeroCycle, ExcludedNodeIsAvoided) {
  ModelGraph mg(3);
  mg.add_edge(0, 1, 0);
  mg.add_edge(1, 0, 0);
  mg.add_edge(1, 2, 1);
  const Potentials pi = shortest_path_tree(mg, 0);
  Rng rng(1);
  EXPECT_TRUE(find_zero_weight_cycle(mg, pi, rng).has_value());
  EXPECT_FALSE(find_zero_weight_cycle(mg, pi, rng, ModelNode{0}).has_value());
}

TEST(ZeroCycle, AgreesWithSimpleCycleEnumeration) {
  Rng rng(31337);
  int found = 0;
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = 2 + rng.index(9);
    const ModelGraph mg = potential_digraph(n, rng.uniform(0.1, 0.4), rng);
    const Potentials pi = shortest_path_tree(mg, 0);
    const std::optional<ModelNode> excluded =
        rng.coin() ? std::optional<ModelNode>(0) : std::nullopt;
    const bool expected = oracle::has_reachable_zero_cycle(mg, 0, excluded);
    const auto c = find_zero_weight_cycle(mg, pi, rng, excluded);
    ASSERT_EQ(c.has_value(), expected) << "instance " << i;
    if (c) {
      ++found;
      EXPECT_TRUE(oracle::is_closed_walk(mg, c->edges));
      EXPECT_EQ(total_weight(mg, c->edges), 0);
      for (ModelEdgeId e : c->edges) {
        if (excluded) {
          EXPECT_NE(mg.edge(e).from, *excluded);
        }
      }
    }
  }
  EXPECT_GT(found, 30);
}

TEST(StPath, ParallelRoutes) {
  ModelGraph mg(2);
  mg.add_edge(0, 1, 5);
  mg.add_edge(0, 1, -2);
  const auto path = shortest_s_t_path(mg, 0, 1);
  ASSERT_TRUE(path.has_value());
  EXPECT_EQ(path->weight, -2);
  EXPECT_EQ(path->edges.size(), 1u);
}

TEST(StPath, UnreachableTarget) {
  ModelGraph mg(3);
  mg.add_edge(0, 1, 1);
  EXPECT_FALSE(shortest_s_t_path(mg, 0, 2).has_value());
}

TEST(StPath, MatchesExhaustiveEnumeration) {
  Rng rng(99);
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = 2 + rng.index(9);
    const ModelGraph mg = rng.coin() ? potential_digraph(n, rng.uniform(0.1, 0.5), rng)
                                     : oracle::random_digraph(n, rng.uniform(0.1, 0.4), -3, 3, rng);
    const ModelNode t = static_cast<ModelNode>(1 + rng.index(n - 1));
    if (oracle::has_reachable_negative_cycle(mg, 0)) {
      EXPECT_THROW(shortest_s_t_path(mg, 0, t), NegativeCycleError);
      continue;
    }
    const auto expected = oracle::min_simple_path(mg, 0, t);
    const auto path = shortest_s_t_path(mg, 0, t);
    ASSERT_EQ(path.has_value(), expected.has_value());
    if (!path) continue;
    EXPECT_EQ(path->weight, *expected);
    EXPECT_TRUE(oracle::is_path(mg, path->edges, 0, t));
    EXPECT_EQ(total_weight(mg, path->edges), path->weight);
  }
}

TEST(Scc, MaskedComponents) {
  ModelGraph mg(4);
  mg.add_edge(0, 1, 0);
  mg.add_edge(1, 0, 0);
  mg.add_edge(1, 2, 0);
  mg.add_edge(2, 3, 0);
  const ModelEdgeId back = mg.add_edge(3, 2, 0);
  std::vector<char> mask(mg.num_edges(), 1);
  std::size_t count = 0;
  auto comp = strongly_connected_components(mg, mask, &count);
  EXPECT_EQ(count, 2u);
  EXPECT_EQ(comp[0], comp[1]);
  EXPECT_EQ(comp[2], comp[3]);
  mask[back] = 0;
  comp = strongly_connected_components(mg, mask, &count);
  EXPECT_EQ(count, 3u);
  EXPECT_NE(comp[2], comp[3]);
}

TEST(Scc, MatchesMutualReachability) {
  Rng rng(5);
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = 1 + rng.index(10);
    const ModelGraph mg = oracle::random_digraph(n, 0.2, 0, 0, rng);
    const std::vector<char> mask(mg.num_edges(), 1);
    const auto comp = strongly_connected_components(mg, mask);
    for (ModelNode u = 0; u < n; ++u) {
      const auto from_u = oracle::reachable_from(mg, u);
      for (ModelNode v = 0; v < n; ++v) {
        const bool mutual = from_u[v] && oracle::reachable_from(mg, v)[u];
        EXPECT_EQ(comp[u] == comp[v], mutual);
      }
    }
  }
}

}  // namespace
}  // namespace kabar
