#include "kabar/basic_model.hpp"

#include <string>

#include "kabar/eligibility.hpp"

namespace kabar {

BasicModel build_basic_model(const Graph& g, const Partition& p, Rng& rng) {
  BasicModel model;
  model.k = p.k();
  model.graph = ModelGraph(static_cast<std::size_t>(p.k()) + 1);

  const BoundaryIndex boundary(g, p);
  std::vector<BlockPair> order(boundary.pairs().begin(), boundary.pairs().end());
  rng.shuffle(order);

  EligibilityState elig(g.num_nodes());
  for (const BlockPair pair : order) {
    model.processed.push_back(pair);
    NodeId best = 0;
    EdgeWeight best_gain = 0;
    std::size_t ties = 0;
    for (NodeId v : boundary.candidates(pair)) {
      if (!elig.eligible(v)) continue;
      const EdgeWeight gv = gain(g, p, v, pair.to);
      if (ties == 0 || gv > best_gain) {
        best = v;
        best_gain = gv;
        ties = 1;
      } else if (gv == best_gain && rng.index(++ties) == 0) {
        best = v;
      }
    }
    if (ties == 0) continue;
    elig.mark(g, best);
    const auto payload = static_cast<std::int32_t>(model.moves.size());
    model.moves.push_back({best, pair.from, pair.to, best_gain});
    model.graph.add_edge(static_cast<ModelNode>(pair.from), static_cast<ModelNode>(pair.to),
                         -best_gain, payload);
  }

  const ModelNode s = model.source();
  for (BlockId b = 0; b < p.k(); ++b) {
    model.graph.add_edge(s, static_cast<ModelNode>(b), 0);
  }
  for (BlockId b = 0; b < p.k(); ++b) {
    if (p.slack(b) >= 1) model.graph.add_edge(static_cast<ModelNode>(b), s, 0);
  }
  return model;
}

std::vector<NodeMove> collect_moves(const BasicModel& model, std::span<const ModelEdgeId> edges) {
  std::vector<NodeMove> moves;
  for (ModelEdgeId e : edges) {
    const ModelEdge& edge = model.graph.edge(e);
    if (!edge.structural()) moves.push_back(model.moves[static_cast<std::size_t>(edge.payload)]);
  }
  return moves;
}

AppliedMoves apply_cycle(const Graph& g, Partition& p, const BasicModel& model,
                         const CycleResult& cycle) {
  return apply_node_moves(g, p, collect_moves(model, cycle.edges), cycle.weight);
}

AppliedMoves apply_node_moves(const Graph& g, Partition& p, std::span<const NodeMove> moves,
                              EdgeWeight predicted_delta) {
  std::vector<std::int64_t> delta(static_cast<std::size_t>(p.k()), 0);
  AppliedMoves applied;
  applied.predicted_delta = predicted_delta;
  for (const NodeMove& m : moves) {
    if (p.block(m.node) != m.from) {
      throw ModelError("stale model: node " + std::to_string(m.node) + " is no longer in block " +
                       std::to_string(m.from));
    }
    --delta[static_cast<std::size_t>(m.from)];
    ++delta[static_cast<std::size_t>(m.to)];
    applied.moves.push_back({m.node, m.to});
  }
  for (BlockId b = 0; b < p.k(); ++b) {
    const auto d = delta[static_cast<std::size_t>(b)];
    if (d > 0 && static_cast<std::int64_t>(p.block_size(b)) + d >
                     static_cast<std::int64_t>(p.perfect_capacity())) {
      throw ModelError("moves would overload block " + std::to_string(b));
    }
  }

  const EdgeWeight before = p.cut();
  p.apply_moves(g, applied.moves);
  applied.actual_delta = p.cut() - before;
  if (applied.actual_delta != predicted_delta) {
    throw InvariantError("cut changed by " + std::to_string(applied.actual_delta) +
                         ", model predicted " + std::to_string(predicted_delta));
  }
  return applied;
}

}  // namespace kabar
