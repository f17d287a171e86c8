#include "kabar/advanced_model.hpp"

#include <algorithm>
#include <stdexcept>

namespace kabar {
namespace {

AdvancedModel build_layers(const Partition& p, PackedSearches packed, std::size_t tau,
                           ModelOptions options, bool with_sink) {
  if (tau == 0) throw std::invalid_argument("layer count must be positive");
  AdvancedModel model;
  model.k = p.k();
  model.layers = tau;
  model.packed = std::move(packed);
  const std::size_t block_nodes = tau * static_cast<std::size_t>(p.k());
  model.graph = ModelGraph(block_nodes + (with_sink ? 2 : 1));
  model.source = static_cast<ModelNode>(block_nodes);
  if (with_sink) model.sink = static_cast<ModelNode>(block_nodes + 1);

  for (const PackedPair& entry : model.packed.pairs()) {
    const BlockPair pair = entry.pair;
    const std::size_t depth = std::min(entry.max_length(), tau);
    for (std::size_t d = 1; d <= depth; ++d) {
      const EdgeWeight gain = entry.best_gain(d);
      const auto payload = static_cast<std::int32_t>(model.payloads.size());
      model.payloads.push_back({pair, d, gain});
      model.graph.add_edge(model.node(pair.from, d), model.node(pair.to, d), -gain, payload);
      if (options.conflict_free) continue;
      const std::int64_t slack = p.slack(pair.to);
      for (std::size_t l = 1; l < d && static_cast<std::int64_t>(l) <= slack; ++l) {
        model.graph.add_edge(model.node(pair.from, d), model.node(pair.to, d - l), -gain, payload);
      }
    }
  }
  for (BlockId b = 0; b < p.k(); ++b) {
    for (std::size_t d = 1; d < tau; ++d) {
      model.graph.add_edge(model.node(b, d), model.node(b, d + 1), 0);
    }
  }
  return model;
}

}  // namespace

AdvancedModel build_advanced_model(const Partition& p, PackedSearches packed, std::size_t tau,
                                   ModelOptions options) {
  AdvancedModel model = build_layers(p, std::move(packed), tau, options, false);
  for (BlockId b = 0; b < p.k(); ++b) {
    for (std::size_t d = 1; d <= tau; ++d) {
      model.graph.add_edge(model.source, model.node(b, d), 0);
    }
  }
  for (BlockId b = 0; b < p.k(); ++b) {
    for (std::size_t d = 1; d <= tau && static_cast<std::int64_t>(d) <= p.slack(b); ++d) {
      model.graph.add_edge(model.node(b, d), model.source, 0);
    }
  }
  return model;
}

AdvancedModel build_balancing_model(const Partition& p, PackedSearches packed, std::size_t tau,
                                    ModelOptions options) {
  AdvancedModel model = build_layers(p, std::move(packed), tau, options, true);
  for (BlockId b = 0; b < p.k(); ++b) {
    if (!p.overloaded(b)) continue;
    for (std::size_t d = 1; d <= tau; ++d) {
      model.graph.add_edge(model.source, model.node(b, d), 0);
    }
  }
  for (BlockId b = 0; b < p.k(); ++b) {
    for (std::size_t d = 1; d <= tau && static_cast<std::int64_t>(d) <= p.slack(b); ++d) {
      model.graph.add_edge(model.node(b, d), *model.sink, 0);
    }
  }
  return model;
}

std::optional<Conflict> check_cycle(const Partition& p, const AdvancedModel& model,
                                    std::span<const ModelEdgeId> edges) {
  std::vector<std::pair<BlockPair, ModelEdgeId>> used;
  for (ModelEdgeId e : edges) {
    const ModelEdge& edge = model.graph.edge(e);
    if (!edge.structural()) {
      used.emplace_back(model.payloads[static_cast<std::size_t>(edge.payload)].pair, e);
    }
  }
  std::vector<ModelEdgeId> repeated;
  for (std::size_t i = 0; i < used.size(); ++i) {
    for (std::size_t j = 0; j < used.size(); ++j) {
      if (i != j && used[i].first == used[j].first) {
        repeated.push_back(used[i].second);
        break;
      }
    }
  }
  if (!repeated.empty()) return Conflict{ConflictKind::NotSimpleInQuotient, std::move(repeated)};

  std::vector<std::int64_t> delta(static_cast<std::size_t>(p.k()), 0);
  for (const auto& [pair, e] : used) {
    const auto d = static_cast<std::int64_t>(
        model.payloads[static_cast<std::size_t>(model.graph.edge(e).payload)].length);
    delta[static_cast<std::size_t>(pair.from)] -= d;
    delta[static_cast<std::size_t>(pair.to)] += d;
  }
  std::vector<ModelEdgeId> overloading;
  for (const auto& [pair, e] : used) {
    const auto to = static_cast<std::size_t>(pair.to);
    if (delta[to] > 0 && p.slack(pair.to) < delta[to]) overloading.push_back(e);
  }
  if (!overloading.empty()) return Conflict{ConflictKind::Overload, std::move(overloading)};
  return std::nullopt;
}

std::vector<NodeMove> collect_moves(const AdvancedModel& model, std::span<const ModelEdgeId> edges) {
  std::vector<NodeMove> moves;
  for (ModelEdgeId e : edges) {
    const ModelEdge& edge = model.graph.edge(e);
    if (edge.structural()) continue;
    const PrefixMove& pm = model.payloads[static_cast<std::size_t>(edge.payload)];
    const PackedPair* entry = model.packed.find(pm.pair);
    const MoveSequence& seq = entry->searches[entry->best[pm.length - 1]];
    for (std::size_t i = 0; i < pm.length; ++i) {
      moves.push_back({seq.nodes[i], pm.pair.from, pm.pair.to,
                       seq.prefix_gain(i + 1) - seq.prefix_gain(i)});
    }
  }
  return moves;
}

bool remove_random_payload_edge(ModelGraph& graph, std::span<const ModelEdgeId> edges, Rng& rng) {
  std::vector<ModelEdgeId> payload_edges;
  for (ModelEdgeId e : edges) {
    if (!graph.edge(e).structural()) payload_edges.push_back(e);
  }
  if (payload_edges.empty()) return false;
  graph.remove_edge(payload_edges[rng.index(payload_edges.size())]);
  return true;
}

std::optional<SolvedCycle> solve_advanced(const Partition& p, AdvancedModel& model, Rng& rng) {
  std::size_t removed = 0;
  while (auto cycle = detect_negative_cycle(model.graph, model.source)) {
    if (!check_cycle(p, model, cycle->edges)) {
      SolvedCycle solved{*cycle, collect_moves(model, cycle->edges), removed};
      return solved;
    }
    // A negative cycle always contains a payload edge.
    remove_random_payload_edge(model.graph, cycle->edges, rng);
    ++removed;
  }
  return std::nullopt;
}

std::optional<SolvedCycle> solve_zero_advanced(const Partition& p, AdvancedModel& model, Rng& rng) {
  std::size_t removed = 0;
  while (true) {
    const Potentials pi = shortest_path_tree(model.graph, model.source);
    auto cycle = find_zero_weight_cycle(model.graph, pi, rng, model.source);
    if (!cycle) return std::nullopt;
    if (!check_cycle(p, model, cycle->edges)) {
      SolvedCycle solved{*cycle, collect_moves(model, cycle->edges), removed};
      return solved;
    }
    // Cycles avoiding the source must return to a lower layer or stay in
    // one, so they contain a payload edge.
    remove_random_payload_edge(model.graph, cycle->edges, rng);
    ++removed;
  }
}

AppliedMoves apply_advanced_cycle(const Graph& g, Partition& p, std::span<const NodeMove> moves,
                                  EdgeWeight predicted_delta) {
  return apply_node_moves(g, p, moves, predicted_delta);
}

}  // namespace kabar
