#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "kabar/model_graph.hpp"
#include "kabar/random.hpp"

namespace kabar {

/// Directed cycle given as consecutive edge ids; weight is the edge sum.
struct CycleResult {
  std::vector<ModelEdgeId> edges;
  EdgeWeight weight = 0;
};

/// Directed s-t path given as consecutive edge ids.
struct PathResult {
  std::vector<ModelEdgeId> edges;
  EdgeWeight weight = 0;
};

/// Shortest-path distances from a source and the tree realizing them.
class Potentials {
 public:
  Potentials() = default;
  Potentials(std::vector<EdgeWeight> dist, std::vector<char> reachable,
             std::vector<ModelEdgeId> parent_edge)
      : dist_(std::move(dist)), reachable_(std::move(reachable)),
        parent_edge_(std::move(parent_edge)) {}

  std::size_t size() const { return dist_.size(); }
  bool reachable(ModelNode v) const { return reachable_[v] != 0; }
  /// Distance from the source; meaningful only for reachable nodes.
  EdgeWeight distance(ModelNode v) const { return dist_[v]; }
  /// Tree edge entering v; meaningful only for reachable non-source nodes.
  ModelEdgeId parent_edge(ModelNode v) const { return parent_edge_[v]; }

  /// weight(e) + distance(from) - distance(to). Both endpoints must be reachable.
  EdgeWeight reduced_cost(const ModelGraph& mg, ModelEdgeId e) const {
    const ModelEdge& edge = mg.edge(e);
    return edge.weight + dist_[edge.from] - dist_[edge.to];
  }

 private:
  std::vector<EdgeWeight> dist_;
  std::vector<char> reachable_;
  std::vector<ModelEdgeId> parent_edge_;
};

/// Raised by routines that require the absence of negative cycles.
class NegativeCycleError : public std::runtime_error {
 public:
  explicit NegativeCycleError(CycleResult cycle)
      : std::runtime_error("negative cycle reachable from source"), cycle_(std::move(cycle)) {}
  const CycleResult& cycle() const { return cycle_; }

 private:
  CycleResult cycle_;
};

/// Finds some negative cycle reachable from s, or nothing.
///
/// FIFO Bellman-Ford with subtree disassembly: when a label decreases, the
/// subtree below the relabeled node is detached from the shortest-path tree
/// (its labels lowered along the way), and a negative cycle is reported as
/// soon as the tail of the relaxed edge turns out to be a descendant of its
/// head.
std::optional<CycleResult> detect_negative_cycle(const ModelGraph& mg, ModelNode s);

/// Shortest-path distances from s. Throws NegativeCycleError if a negative
/// cycle is reachable from s.
Potentials shortest_path_tree(const ModelGraph& mg, ModelNode s);

/// Finds a cycle of weight exactly zero among nodes reachable under `pi`.
///
/// Keeps the active edges with reduced cost 0, splits them into strongly
/// connected components and random-walks inside a random non-trivial
/// component until a node repeats. `excluded`, when given, is left out of
/// the search (used to keep cycles through the virtual source out).
std::optional<CycleResult> find_zero_weight_cycle(const ModelGraph& mg, const Potentials& pi,
                                                  Rng& rng,
                                                  std::optional<ModelNode> excluded = {});

/// Minimum-weight path from s to t, or nothing when t is unreachable.
/// Throws NegativeCycleError if a negative cycle is reachable from s.
std::optional<PathResult> shortest_s_t_path(const ModelGraph& mg, ModelNode s, ModelNode t);

/// Strongly connected components of the subgraph formed by the edges whose
/// mask entry is non-zero. Returns a component id per node.
std::vector<std::size_t> strongly_connected_components(const ModelGraph& mg,
                                                       std::span<const char> edge_mask,
                                                       std::size_t* count = nullptr);

/// Sum of the weights of the given edges.
EdgeWeight total_weight(const ModelGraph& mg, std::span<const ModelEdgeId> edges);

}  // namespace kabar
