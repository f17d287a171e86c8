#pragma once

#include <cstddef>
#include <vector>

#include "kabar/graph.hpp"
#include "kabar/types.hpp"

namespace kabar {

/// Marks consumed by local searches during one model construction.
///
/// A node is eligible iff neither it nor any of its neighbors is marked.
/// Eligibility only ever decreases until reset().
class EligibilityState {
 public:
  explicit EligibilityState(std::size_t num_nodes)
      : marked_(num_nodes, 0), blocked_(num_nodes, 0) {}

  void mark(const Graph& g, NodeId v) {
    if (marked_[v]) return;
    marked_[v] = 1;
    block(v);
    for (NodeId u : g.neighbors(v)) block(u);
  }

  bool marked(NodeId v) const { return marked_[v] != 0; }
  bool eligible(NodeId v) const { return blocked_[v] == 0; }

  /// Makes every node eligible again.
  void reset() {
    for (NodeId v : touched_) {
      marked_[v] = 0;
      blocked_[v] = 0;
    }
    touched_.clear();
  }

 private:
  void block(NodeId v) {
    if (!blocked_[v]) {
      blocked_[v] = 1;
      touched_.push_back(v);
    }
  }

  std::vector<char> marked_;
  std::vector<char> blocked_;
  std::vector<NodeId> touched_;
};

}  // namespace kabar
