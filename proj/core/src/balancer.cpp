#include "kabar/balancer.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <string>
#include <unordered_map>

namespace kabar {
namespace {

std::vector<std::vector<BlockId>> quotient_adjacency(BlockId k, std::span<const BlockPair> quotient) {
  std::vector<std::vector<BlockId>> adj(static_cast<std::size_t>(k));
  for (const BlockPair& pair : quotient) adj[static_cast<std::size_t>(pair.from)].push_back(pair.to);
  return adj;
}

// Connected component per block in the (symmetric) quotient graph.
std::vector<std::size_t> quotient_components(BlockId k, std::span<const BlockPair> quotient) {
  const auto adj = quotient_adjacency(k, quotient);
  constexpr auto kUnset = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> comp(static_cast<std::size_t>(k), kUnset);
  std::size_t next = 0;
  std::vector<BlockId> stack;
  for (BlockId root = 0; root < k; ++root) {
    if (comp[static_cast<std::size_t>(root)] != kUnset) continue;
    comp[static_cast<std::size_t>(root)] = next;
    stack.push_back(root);
    while (!stack.empty()) {
      const BlockId b = stack.back();
      stack.pop_back();
      for (BlockId c : adj[static_cast<std::size_t>(b)]) {
        if (comp[static_cast<std::size_t>(c)] == kUnset) {
          comp[static_cast<std::size_t>(c)] = next;
          stack.push_back(c);
        }
      }
    }
    ++next;
  }
  return comp;
}

std::vector<BlockId> shuffled_blocks(const Partition& p, Rng& rng, bool overloaded) {
  std::vector<BlockId> blocks;
  for (BlockId b = 0; b < p.k(); ++b) {
    if (overloaded ? p.overloaded(b) : p.slack(b) >= 1) blocks.push_back(b);
  }
  rng.shuffle(blocks);
  return blocks;
}

// Collapses a move sequence in which nodes may move repeatedly into one move
// per node from its original block to its final block.
std::vector<NodeMove> net_moves(std::span<const NodeMove> steps) {
  std::vector<NodeMove> net;
  std::unordered_map<NodeId, std::size_t> index;
  for (const NodeMove& m : steps) {
    const auto it = index.find(m.node);
    if (it == index.end()) {
      index.emplace(m.node, net.size());
      net.push_back(m);
    } else {
      net[it->second].to = m.to;
      net[it->second].gain += m.gain;
    }
  }
  std::erase_if(net, [](const NodeMove& m) { return m.from == m.to; });
  return net;
}

}  // namespace

std::vector<BlockId> QuotientForest::path_to(BlockId b) const {
  std::vector<BlockId> path;
  for (BlockId c = b; c != kInvalidBlock; c = parent[static_cast<std::size_t>(c)]) {
    path.push_back(c);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

QuotientForest overload_forest(const Partition& p, std::span<const BlockPair> quotient, Rng& rng) {
  const auto adj = quotient_adjacency(p.k(), quotient);
  QuotientForest forest;
  forest.parent.assign(static_cast<std::size_t>(p.k()), kInvalidBlock);
  forest.reached.assign(static_cast<std::size_t>(p.k()), 0);
  std::deque<BlockId> queue;
  for (BlockId b : shuffled_blocks(p, rng, true)) {
    forest.reached[static_cast<std::size_t>(b)] = 1;
    queue.push_back(b);
  }
  while (!queue.empty()) {
    const BlockId b = queue.front();
    queue.pop_front();
    for (BlockId c : adj[static_cast<std::size_t>(b)]) {
      if (!forest.reached[static_cast<std::size_t>(c)]) {
        forest.reached[static_cast<std::size_t>(c)] = 1;
        forest.parent[static_cast<std::size_t>(c)] = b;
        queue.push_back(c);
      }
    }
  }
  return forest;
}

std::optional<IntegratedPath> integrate_path(const Graph& g, Partition& p, EligibilityState& elig,
                                             Rng& rng, const BoundaryIndex& boundary) {
  const QuotientForest forest = overload_forest(p, boundary.pairs(), rng);
  for (BlockId target : shuffled_blocks(p, rng, false)) {
    if (!forest.reached[static_cast<std::size_t>(target)]) continue;
    IntegratedPath result;
    result.blocks = forest.path_to(target);
    bool complete = true;
    for (std::size_t i = 0; i + 1 < result.blocks.size(); ++i) {
      const BlockPair pair{result.blocks[i], result.blocks[i + 1]};
      MoveSequence seq = directed_local_search(g, p, pair, 1, elig, rng, boundary.candidates(pair));
      if (seq.empty()) {
        complete = false;
        break;
      }
      result.searches.push_back(std::move(seq));
    }
    if (complete) return result;
    elig.reset();
  }
  return std::nullopt;
}

std::optional<AppliedMoves> fallback_balance(const Graph& g, Partition& p, Rng& rng) {
  const auto quotient = quotient_graph(g, p);
  const QuotientForest forest = overload_forest(p, quotient, rng);
  const EdgeWeight cut_before = p.cut();

  std::optional<std::vector<NodeMove>> best;
  EdgeWeight best_cut = 0;
  for (BlockId target = 0; target < p.k(); ++target) {
    if (p.slack(target) < 1 || !forest.reached[static_cast<std::size_t>(target)]) continue;
    const auto path = forest.path_to(target);
    if (path.size() < 2) continue;

    std::vector<NodeMove> steps;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      const BlockId from = path[i];
      const BlockId to = path[i + 1];
      NodeId chosen = 0;
      EdgeWeight chosen_gain = 0;
      std::size_t ties = 0;
      for (NodeId v = 0; v < g.num_nodes(); ++v) {
        if (p.block(v) != from) continue;
        const EdgeWeight gv = gain(g, p, v, to);
        if (ties == 0 || gv > chosen_gain) {
          chosen = v;
          chosen_gain = gv;
          ties = 1;
        } else if (gv == chosen_gain && rng.index(++ties) == 0) {
          chosen = v;
        }
      }
      if (ties == 0) break;
      p.move(g, chosen, to);
      steps.push_back({chosen, from, to, chosen_gain});
    }
    const bool complete = steps.size() + 1 == path.size();
    const EdgeWeight cut_after = p.cut();
    for (auto it = steps.rbegin(); it != steps.rend(); ++it) p.move(g, it->node, it->from);
    if (complete && (!best || cut_after < best_cut)) {
      best = net_moves(steps);
      best_cut = cut_after;
    }
  }
  if (!best) return std::nullopt;
  return apply_node_moves(g, p, *best, best_cut - cut_before);
}

AppliedMoves move_random_for_component(const Graph& g, Partition& p, BlockId block, Rng& rng) {
  auto random_node_of = [&](BlockId b) {
    std::vector<NodeId> nodes;
    for (NodeId v = 0; v < g.num_nodes(); ++v) {
      if (p.block(v) == b) nodes.push_back(v);
    }
    return nodes[rng.index(nodes.size())];
  };

  NodeMove move;
  if (p.overloaded(block)) {
    std::vector<BlockId> underloaded;
    for (BlockId b = 0; b < p.k(); ++b) {
      if (p.slack(b) >= 1) underloaded.push_back(b);
    }
    if (underloaded.empty()) throw InvariantError("overloaded partition without free capacity");
    move = {random_node_of(block), block, underloaded[rng.index(underloaded.size())], 0};
  } else {
    const auto overloaded = shuffled_blocks(p, rng, true);
    if (overloaded.empty() || p.slack(block) < 1) {
      throw std::invalid_argument("no overloaded block or no capacity in target block");
    }
    move = {random_node_of(overloaded.front()), overloaded.front(), block, 0};
  }
  move.gain = gain(g, p, move.node, move.to);
  const NodeMove moves[] = {move};
  return apply_node_moves(g, p, moves, -move.gain);
}

std::optional<BalanceOutcome> balance_step(const Graph& g, Partition& p, const BalanceConfig& cfg,
                                           Rng& rng) {
  if (p.overload() == 0) return std::nullopt;
  BalanceOutcome outcome;
  outcome.overload_before = p.overload();

  auto finish = [&](BalanceRoute route, AppliedMoves applied) {
    outcome.route = route;
    outcome.applied = std::move(applied);
    outcome.overload_after = p.overload();
    if (outcome.overload_after >= outcome.overload_before) {
      throw InvariantError("balancing step did not lower the overload");
    }
    return outcome;
  };

  const BoundaryIndex boundary(g, p);
  const auto comp = quotient_components(p.k(), boundary.pairs());
  std::vector<char> has_capacity(static_cast<std::size_t>(p.k()), 0);
  for (BlockId b = 0; b < p.k(); ++b) {
    if (p.slack(b) >= 1) has_capacity[comp[static_cast<std::size_t>(b)]] = 1;
  }
  for (BlockId b : shuffled_blocks(p, rng, true)) {
    if (!has_capacity[comp[static_cast<std::size_t>(b)]]) {
      return finish(BalanceRoute::Component, move_random_for_component(g, p, b, rng));
    }
  }

  EligibilityState elig(g.num_nodes());
  if (auto integrated = integrate_path(g, p, elig, rng, boundary)) {
    const std::size_t tau = std::max<std::size_t>(cfg.tau, 1);
    PackedSearches packed =
        pack_searches(g, p, boundary.pairs(), tau, std::max<std::size_t>(cfg.mu, 1), elig, rng,
                      boundary);
    for (MoveSequence& seq : integrated->searches) packed.add(std::move(seq));
    AdvancedModel model =
        build_balancing_model(p, std::move(packed), tau, {.conflict_free = cfg.conflict_free});

    while (model.graph.num_active_edges() > 0) {
      std::optional<PathResult> path;
      try {
        path = shortest_s_t_path(model.graph, model.source, *model.sink);
      } catch (const NegativeCycleError& e) {
        // Shortest paths are undefined with a negative cycle in reach; drop
        // one of its move edges and retry on the smaller model.
        if (!remove_random_payload_edge(model.graph, e.cycle().edges, rng)) break;
        continue;
      }
      if (!path) break;
      if (check_cycle(p, model, path->edges)) {
        if (!remove_random_payload_edge(model.graph, path->edges, rng)) break;
        continue;
      }
      const auto moves = collect_moves(model, path->edges);
      return finish(BalanceRoute::ModelPath, apply_node_moves(g, p, moves, path->weight));
    }
  }

  if (auto applied = fallback_balance(g, p, rng)) {
    return finish(BalanceRoute::Fallback, std::move(*applied));
  }
  const auto overloaded = shuffled_blocks(p, rng, true);
  return finish(BalanceRoute::Component, move_random_for_component(g, p, overloaded.front(), rng));
}

}  // namespace kabar
