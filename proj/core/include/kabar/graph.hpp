#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "kabar/types.hpp"

namespace kabar {

/// Undirected edge as handed to the builder. Endpoints are 0-based.
struct WeightedEdge {
  NodeId u = 0;
  NodeId v = 0;
  EdgeWeight weight = 1;
};

/// Immutable undirected graph in compressed adjacency form.
///
/// Each undirected edge {u, v} is stored twice (u -> v and v -> u) with the
/// same weight. Self-loops are dropped and parallel edges merged (weights
/// summed) at construction; all weights are positive integers.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph over `num_nodes` nodes. Throws std::invalid_argument on
  /// out-of-range endpoints or non-positive weights.
  static Graph from_edges(std::size_t num_nodes, std::span<const WeightedEdge> edges);

  std::size_t num_nodes() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  /// Number of undirected edges.
  std::size_t num_edges() const { return targets_.size() / 2; }

  std::span<const NodeId> neighbors(NodeId v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  std::span<const EdgeWeight> weights(NodeId v) const {
    return {weights_.data() + offsets_[v], weights_.data() + offsets_[v + 1]};
  }
  std::size_t degree(NodeId v) const { return offsets_[v + 1] - offsets_[v]; }

  EdgeWeight weighted_degree(NodeId v) const;
  EdgeWeight total_edge_weight() const { return total_weight_; }

  /// Edge list with u < v, sorted.
  std::vector<WeightedEdge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<NodeId> targets_;
  std::vector<EdgeWeight> weights_;
  EdgeWeight total_weight_ = 0;
};

/// Connected component id per node, numbered from 0 in order of first node.
std::vector<std::size_t> connected_components(const Graph& g, std::size_t* count = nullptr);

}  // namespace kabar
