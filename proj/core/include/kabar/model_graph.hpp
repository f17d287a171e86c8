#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "kabar/types.hpp"

namespace kabar {

using ModelNode = std::uint32_t;
using ModelEdgeId = std::uint32_t;

/// Payload id of edges that carry no node movements.
inline constexpr std::int32_t kStructural = -1;

struct ModelEdge {
  ModelNode from = 0;
  ModelNode to = 0;
  EdgeWeight weight = 0;
  /// Index into the owning model's move table, or kStructural.
  std::int32_t payload = kStructural;

  bool structural() const { return payload == kStructural; }
};

/// Directed multigraph with integer (possibly negative) edge weights.
///
/// Edges can be deactivated but never erased, so edge ids stay stable while
/// conflict resolution prunes the graph.
class ModelGraph {
 public:
  explicit ModelGraph(std::size_t num_nodes = 0) : out_(num_nodes) {}

  ModelNode add_node() {
    out_.emplace_back();
    return static_cast<ModelNode>(out_.size() - 1);
  }

  ModelEdgeId add_edge(ModelNode from, ModelNode to, EdgeWeight weight,
                       std::int32_t payload = kStructural);

  void remove_edge(ModelEdgeId e);
  bool active(ModelEdgeId e) const { return active_[e] != 0; }

  std::size_t num_nodes() const { return out_.size(); }
  /// Edge ids ever issued, including removed ones.
  std::size_t num_edges() const { return edges_.size(); }
  std::size_t num_active_edges() const { return active_count_; }

  const ModelEdge& edge(ModelEdgeId e) const { return edges_[e]; }
  std::span<const ModelEdge> edges() const { return edges_; }

  /// Outgoing edge ids of v, including removed ones; check active().
  std::span<const ModelEdgeId> out_edges(ModelNode v) const { return out_[v]; }

 private:
  std::vector<ModelEdge> edges_;
  std::vector<char> active_;
  std::vector<std::vector<ModelEdgeId>> out_;
  std::size_t active_count_ = 0;
};

}  // namespace kabar
