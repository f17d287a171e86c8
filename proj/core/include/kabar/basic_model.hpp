#pragma once

#include <vector>

#include "kabar/cycle_solver.hpp"
#include "kabar/graph.hpp"
#include "kabar/model_graph.hpp"
#include "kabar/partition.hpp"
#include "kabar/random.hpp"

namespace kabar {

/// One recorded node movement with its gain at selection time.
struct NodeMove {
  NodeId node = 0;
  BlockId from = 0;
  BlockId to = 0;
  EdgeWeight gain = 0;
};

/// Weighted directed quotient graph with one selected node per edge.
///
/// Model node b (0 <= b < k) is block b; node k is the virtual source. Edge
/// payloads index `moves`. The selected nodes form an independent set of G.
struct BasicModel {
  ModelGraph graph;
  BlockId k = 0;
  std::vector<NodeMove> moves;
  /// Directed quotient edges in the order they were processed, including
  /// those for which no eligible node existed.
  std::vector<BlockPair> processed;

  ModelNode source() const { return static_cast<ModelNode>(k); }
};

/// Builds the basic model: directed quotient edges are visited in random
/// order; each receives the maximum-gain eligible boundary node (ties broken
/// at random), which is then marked. The source connects to every block with
/// weight 0, and every block with free capacity connects back to the source.
BasicModel build_basic_model(const Graph& g, const Partition& p, Rng& rng);

struct AppliedMoves {
  std::vector<Move> moves;
  /// Cut change announced by the model (cycle or path weight).
  EdgeWeight predicted_delta = 0;
  /// Cut change observed on the partition.
  EdgeWeight actual_delta = 0;
};

/// Moves of a model walk: the payload moves of each non-structural edge.
std::vector<NodeMove> collect_moves(const BasicModel& model, std::span<const ModelEdgeId> edges);

/// Applies the node moves of a cycle of `model.graph`.
///
/// Throws ModelError if a recorded node is no longer in its source block or
/// if a block that receives nodes would end above ceil(n / k); throws
/// InvariantError if the cut change differs from the cycle weight.
AppliedMoves apply_cycle(const Graph& g, Partition& p, const BasicModel& model,
                         const CycleResult& cycle);

/// Shared tail of every model application: validates sources and capacities,
/// applies the moves, and checks the cut change against `predicted_delta`.
AppliedMoves apply_node_moves(const Graph& g, Partition& p, std::span<const NodeMove> moves,
                              EdgeWeight predicted_delta);

}  // namespace kabar
