#include <gtest/gtest.h>

#include <set>

#include "kabar/balancer.hpp"
#include "kabar/generators.hpp"
#include "oracles.hpp"

namespace kabar {
namespace {

Graph clique(std::size_t n) {
  std::vector<WeightedEdge> edges;
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) edges.push_back({u, v, 1});
  }
  return Graph::from_edges(n, edges);
}

// Random assignment whose blocks hold at most `cap` nodes, with `overload`
// extra nodes pushed into random blocks.
std::vector<BlockId> overloaded_assignment(std::size_t n, BlockId k, std::size_t overload, Rng& rng) {
  auto a = oracle::random_balanced_assignment(n, k, rng);
  const std::size_t cap = perfect_capacity(n, k);
  std::size_t moved = 0;
  std::size_t guard = 0;
  while (moved < overload && guard++ < 100000) {
    auto sizes = oracle::recount_sizes(a, k);
    const auto v = static_cast<NodeId>(rng.index(n));
    const auto to = static_cast<BlockId>(rng.index(static_cast<std::size_t>(k)));
    if (a[v] == to || sizes[static_cast<std::size_t>(a[v])] > cap) continue;
    a[v] = to;
    sizes = oracle::recount_sizes(a, k);
    std::size_t total = 0;
    for (std::size_t s : sizes) total += s > cap ? s - cap : 0;
    moved = total;
  }
  return a;
}

TEST(BalanceStep, BalancedInputIsNoOp) {
  Rng rng(1);
  const Graph g = random_connected_graph(40, 40, 2, rng);
  // 14/12/14 over capacity 14 is already perfectly balanced.
  std::vector<BlockId> a(40, 0);
  for (std::size_t i = 14; i < 26; ++i) a[i] = 1;
  for (std::size_t i = 26; i < 40; ++i) a[i] = 2;
  Partition p(g, 3, a);
  ASSERT_TRUE(p.perfectly_balanced());
  const Partition before = p;
  EXPECT_FALSE(balance_step(g, p, {}, rng).has_value());
  EXPECT_EQ(p, before);
}

TEST(BalanceStep, OverloadedThreeBlocksReachBalanceWithExactDeltas) {
  Rng gen(2);
  for (int round = 0; round < 40; ++round) {
    const Graph g = random_connected_graph(30, 25, 3, gen);
    Partition p(g, 3, overloaded_assignment(30, 3, 2, gen));
    ASSERT_EQ(p.overload(), 2u);
    int steps = 0;
    while (!p.perfectly_balanced()) {
      const EdgeWeight before = oracle::recount_cut(g, p.assignment());
      const auto outcome = balance_step(g, p, {}, gen);
      ASSERT_TRUE(outcome.has_value());
      ++steps;
      EXPECT_LT(outcome->overload_after, outcome->overload_before);
      EXPECT_EQ(outcome->overload_after, p.overload());
      EXPECT_EQ(outcome->applied.actual_delta, outcome->applied.predicted_delta);
      EXPECT_EQ(oracle::recount_cut(g, p.assignment()), before + outcome->applied.actual_delta);
      EXPECT_NO_THROW(p.check_consistency(g));
    }
    EXPECT_LE(steps, 2);
  }
}

TEST(BalanceStep, LayeredBalancingKeepsDeltasExact) {
  Rng gen(3);
  for (int round = 0; round < 40; ++round) {
    const std::size_t n = 40 + gen.index(80);
    const BlockId k = static_cast<BlockId>(2 + gen.index(5));
    const Graph g = random_connected_graph(n, n, 2, gen);
    Partition p(g, k, overloaded_assignment(n, k, 1 + gen.index(6), gen));
    const BalanceConfig cfg{1 + gen.index(5), 1 + gen.index(3), gen.coin()};
    std::size_t guard = 0;
    while (!p.perfectly_balanced() && guard++ < 100) {
      const std::size_t overload = p.overload();
      const EdgeWeight before = oracle::recount_cut(g, p.assignment());
      const auto outcome = balance_step(g, p, cfg, gen);
      ASSERT_TRUE(outcome.has_value());
      EXPECT_LT(p.overload(), overload);
      EXPECT_EQ(oracle::recount_cut(g, p.assignment()), before + outcome->applied.actual_delta);
    }
    EXPECT_TRUE(p.perfectly_balanced());
  }
}

TEST(OverloadForest, RootsAreOverloadedAndParentsAdjacent) {
  Rng gen(4);
  for (int round = 0; round < 50; ++round) {
    const Graph g = random_connected_graph(50, 30, 1, gen);
    const BlockId k = 5;
    const Partition p(g, k, overloaded_assignment(50, k, 3, gen));
    const auto quotient = quotient_graph(g, p);
    const std::set<BlockPair> q(quotient.begin(), quotient.end());
    const QuotientForest f = overload_forest(p, quotient, gen);
    for (BlockId b = 0; b < k; ++b) {
      const BlockId parent = f.parent[static_cast<std::size_t>(b)];
      if (p.overloaded(b)) {
        EXPECT_TRUE(f.reached[static_cast<std::size_t>(b)]);
        EXPECT_EQ(parent, kInvalidBlock);
      } else if (f.reached[static_cast<std::size_t>(b)]) {
        ASSERT_NE(parent, kInvalidBlock);
        EXPECT_TRUE(q.contains(BlockPair{parent, b}));
        const auto path = f.path_to(b);
        EXPECT_TRUE(p.overloaded(path.front()));
        EXPECT_EQ(path.back(), b);
      }
    }
  }
}

TEST(IntegratePath, SingleHopWithEligibleNode) {
  const std::vector<WeightedEdge> edges{{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 4, 1}};
  const Graph g = Graph::from_edges(5, edges);
  Partition p(g, 2, {0, 0, 0, 0, 1});
  const BoundaryIndex boundary(g, p);
  EligibilityState elig(5);
  Rng rng(1);
  const auto path = integrate_path(g, p, elig, rng, boundary);
  ASSERT_TRUE(path.has_value());
  EXPECT_EQ(path->blocks, (std::vector<BlockId>{0, 1}));
  ASSERT_EQ(path->searches.size(), 1u);
  EXPECT_EQ(path->searches[0].nodes, std::vector<NodeId>{3});
  EXPECT_TRUE(elig.marked(3));
}

TEST(IntegratePath, FailsWhenTheSecondHopHasNoEligibleNode) {
  // Overloaded X = {0..4}, middle M = {5, 6, 7}, target T = {8}; the only
  // M node next to T neighbors the only X node next to M.
  const std::vector<WeightedEdge> edges{{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 4, 1},
                                        {4, 5, 1}, {5, 6, 1}, {6, 7, 1}, {5, 8, 1}};
  const Graph g = Graph::from_edges(9, edges);
  Partition p(g, 3, {0, 0, 0, 0, 0, 1, 1, 1, 2});
  const BoundaryIndex boundary(g, p);
  EligibilityState elig(9);
  Rng rng(1);
  EXPECT_FALSE(integrate_path(g, p, elig, rng, boundary).has_value());
  for (NodeId v = 0; v < 9; ++v) EXPECT_TRUE(elig.eligible(v));
  // The balancer still makes progress.
  const auto outcome = balance_step(g, p, {}, rng);
  ASSERT_TRUE(outcome.has_value());
  EXPECT_NE(outcome->route, BalanceRoute::ModelPath);
  EXPECT_EQ(p.overload(), 1u);
}

TEST(IntegratePath, SuccessfulPathsAreConsistent) {
  Rng gen(5);
  int successes = 0;
  for (int round = 0; round < 80; ++round) {
    const Graph g = random_connected_graph(60, 40, 1, gen);
    const BlockId k = 6;
    Partition p(g, k, overloaded_assignment(60, k, 2, gen));
    const BoundaryIndex boundary(g, p);
    EligibilityState elig(60);
    const auto path = integrate_path(g, p, elig, gen, boundary);
    if (!path) continue;
    ++successes;
    EXPECT_TRUE(p.overloaded(path->blocks.front()));
    EXPECT_GE(p.slack(path->blocks.back()), 1);
    ASSERT_EQ(path->searches.size() + 1, path->blocks.size());
    std::vector<NodeId> nodes;
    for (std::size_t i = 0; i < path->searches.size(); ++i) {
      const MoveSequence& s = path->searches[i];
      EXPECT_EQ(s.pair, (BlockPair{path->blocks[i], path->blocks[i + 1]}));
      ASSERT_EQ(s.size(), 1u);
      EXPECT_EQ(p.block(s.nodes[0]), s.pair.from);
      EXPECT_EQ(s.prefix_gain(1), gain(g, p, s.nodes[0], s.pair.to));
      nodes.push_back(s.nodes[0]);
    }
    for (NodeId a : nodes) {
      for (NodeId b : nodes) {
        if (a == b) continue;
        for (NodeId u : g.neighbors(a)) EXPECT_NE(u, b);
      }
    }
  }
  EXPECT_GT(successes, 40);
}

TEST(FallbackBalance, TwoBlocksMoveOneMaxGainNode) {
  Rng gen(6);
  for (int round = 0; round < 30; ++round) {
    const Graph g = random_connected_graph(21, 20, 3, gen);
    Partition p(g, 2, overloaded_assignment(21, 2, 1, gen));
    const BlockId over = p.overloaded(0) ? 0 : 1;
    EdgeWeight best = std::numeric_limits<EdgeWeight>::min();
    for (NodeId v = 0; v < 21; ++v) {
      if (p.block(v) == over) best = std::max(best, gain(g, p, v, 1 - over));
    }
    const EdgeWeight before = p.cut();
    const auto applied = fallback_balance(g, p, gen);
    ASSERT_TRUE(applied.has_value());
    ASSERT_EQ(applied->moves.size(), 1u);
    EXPECT_EQ(p.cut(), before - best);
    EXPECT_EQ(p.overload(), 0u);
  }
}

TEST(FallbackBalance, StarOfBlocksPicksTheCheapestLeaf) {
  Rng gen(7);
  for (int round = 0; round < 30; ++round) {
    // Center block 0 with 14 nodes, four leaf blocks with 9 nodes each;
    // every leaf touches only the center.
    std::vector<WeightedEdge> edges;
    std::vector<BlockId> a;
    for (NodeId v = 0; v < 14; ++v) a.push_back(0);
    for (BlockId leaf = 1; leaf <= 4; ++leaf) {
      for (int i = 0; i < 9; ++i) a.push_back(leaf);
    }
    const std::size_t n = a.size();
    for (std::size_t i = 0; i < 3 * n; ++i) {
      const auto u = static_cast<NodeId>(gen.index(n));
      const auto v = static_cast<NodeId>(gen.index(n));
      if (u == v) continue;
      if (a[u] != a[v] && a[u] != 0 && a[v] != 0) continue;
      edges.push_back({u, v, gen.range(1, 4)});
    }
    for (BlockId leaf = 1; leaf <= 4; ++leaf) {
      edges.push_back({static_cast<NodeId>(leaf), static_cast<NodeId>(14 + 9 * (leaf - 1)), 1});
    }
    const Graph g = Graph::from_edges(n, edges);
    Partition p(g, 5, a);
    ASSERT_EQ(p.perfect_capacity(), 10u);
    ASSERT_EQ(p.overload(), 4u);

    EdgeWeight expected = std::numeric_limits<EdgeWeight>::max();
    for (BlockId leaf = 1; leaf <= 4; ++leaf) {
      EdgeWeight best = std::numeric_limits<EdgeWeight>::min();
      for (NodeId v = 0; v < 14; ++v) best = std::max(best, gain(g, p, v, leaf));
      expected = std::min(expected, p.cut() - best);
    }
    const auto applied = fallback_balance(g, p, gen);
    ASSERT_TRUE(applied.has_value());
    EXPECT_EQ(p.cut(), expected);
    EXPECT_EQ(oracle::recount_cut(g, p.assignment()), expected);
    EXPECT_EQ(p.overload(), 3u);
  }
}

TEST(FallbackBalance, ConnectedInstancesLoseExactlyOneOverload) {
  Rng gen(8);
  for (int round = 0; round < 50; ++round) {
    const std::size_t n = 30 + gen.index(50);
    const BlockId k = static_cast<BlockId>(2 + gen.index(5));
    const Graph g = random_connected_graph(n, n / 2, 2, gen);
    Partition p(g, k, overloaded_assignment(n, k, 1 + gen.index(4), gen));
    const std::size_t overload = p.overload();
    const EdgeWeight before = oracle::recount_cut(g, p.assignment());
    const auto applied = fallback_balance(g, p, gen);
    ASSERT_TRUE(applied.has_value());
    EXPECT_EQ(p.overload(), overload - 1);
    EXPECT_EQ(oracle::recount_cut(g, p.assignment()), before + applied->actual_delta);
  }
}

TEST(ComponentRoute, TwoDisjointCliques) {
  const Graph a = clique(5);
  const Graph b = clique(3);
  const std::vector<Graph> parts{a, b};
  const Graph g = disjoint_union(parts);
  Partition p(g, 2, {0, 0, 0, 0, 0, 1, 1, 1});
  ASSERT_EQ(p.overload(), 1u);
  Rng rng(1);
  const auto outcome = balance_step(g, p, {}, rng);
  ASSERT_TRUE(outcome.has_value());
  EXPECT_EQ(outcome->route, BalanceRoute::Component);
  EXPECT_EQ(outcome->applied.moves.size(), 1u);
  EXPECT_EQ(p.overload(), 0u);
  EXPECT_EQ(p.cut(), oracle::recount_cut(g, p.assignment()));
}

TEST(ComponentRoute, UnderloadedSingletonReceivesANode) {
  const std::vector<WeightedEdge> edges{{0, 1, 1}, {1, 2, 1}, {2, 3, 1}};
  const Graph g = Graph::from_edges(6, edges);
  Partition p(g, 3, {0, 0, 0, 0, 1, 2});
  Rng rng(2);
  const auto applied = move_random_for_component(g, p, 2, rng);
  ASSERT_EQ(applied.moves.size(), 1u);
  EXPECT_EQ(applied.moves[0].to, 2);
  EXPECT_EQ(p.block_size(2), 2u);
  EXPECT_EQ(p.overload(), 1u);
}

TEST(ComponentRoute, DisconnectedFixturesStrictlyLowerOverload) {
  Rng gen(9);
  for (int round = 0; round < 40; ++round) {
    std::vector<Graph> parts;
    const std::size_t count = 2 + gen.index(4);
    for (std::size_t i = 0; i < count; ++i) {
      parts.push_back(random_connected_graph(3 + gen.index(20), gen.index(10), 2, gen));
    }
    const Graph g = disjoint_union(parts);
    const std::size_t n = g.num_nodes();
    const BlockId k = static_cast<BlockId>(2 + gen.index(std::min<std::size_t>(n / 2, 6)));
    Partition p(g, k, overloaded_assignment(n, k, 1 + gen.index(5), gen));
    std::size_t guard = 0;
    while (!p.perfectly_balanced() && guard++ < 200) {
      const std::size_t overload = p.overload();
      const EdgeWeight before = oracle::recount_cut(g, p.assignment());
      const auto outcome = balance_step(g, p, {2, 2, false}, gen);
      ASSERT_TRUE(outcome.has_value());
      EXPECT_LT(p.overload(), overload);
      EXPECT_EQ(oracle::recount_cut(g, p.assignment()), before + outcome->applied.actual_delta);
    }
    EXPECT_TRUE(p.perfectly_balanced());
  }
}

}  // namespace
}  // namespace kabar
