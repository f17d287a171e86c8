#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "kabar/basic_model.hpp"
#include "kabar/cycle_solver.hpp"
#include "kabar/directed_search.hpp"
#include "kabar/model_graph.hpp"
#include "kabar/partition.hpp"

namespace kabar {

/// Payload of a layered-model edge: move the best packed prefix of length
/// `length` from pair.from to pair.to.
struct PrefixMove {
  BlockPair pair;
  std::size_t length = 0;
  EdgeWeight gain = 0;
};

/// Layered model over packed directed local searches.
///
/// Layer d (1..layers) is a copy of the quotient graph whose edge (A, B)
/// moves the first d nodes of the best packed search for (A, B). Forward
/// edges lift a block to the next layer; backward edges and edges into the
/// source/sink encode moves that change block sizes within capacity.
struct AdvancedModel {
  ModelGraph graph;
  BlockId k = 0;
  std::size_t layers = 0;
  ModelNode source = 0;
  /// Present only in balancing models.
  std::optional<ModelNode> sink;
  std::vector<PrefixMove> payloads;
  PackedSearches packed;

  ModelNode node(BlockId block, std::size_t layer) const {
    return static_cast<ModelNode>((layer - 1) * static_cast<std::size_t>(k) +
                                  static_cast<std::size_t>(block));
  }
  BlockId block_of(ModelNode v) const { return static_cast<BlockId>(v % static_cast<ModelNode>(k)); }
  std::size_t layer_of(ModelNode v) const { return v / static_cast<ModelNode>(k) + 1; }
  bool is_block_node(ModelNode v) const {
    return v < static_cast<ModelNode>(layers * static_cast<std::size_t>(k));
  }
};

struct ModelOptions {
  /// Drop the backward edges between layers. The model then has no
  /// conflicts but encodes fewer combinations.
  bool conflict_free = false;
};

/// Refinement model: the source reaches every block node with weight 0 and
/// block node (i, d) returns to the source iff block i can take d more nodes.
AdvancedModel build_advanced_model(const Partition& p, PackedSearches packed, std::size_t tau,
                                   ModelOptions options = {});

/// Balancing model: the source reaches only the layer nodes of overloaded
/// blocks and (i, d) connects to an extra sink iff block i can take d nodes.
AdvancedModel build_balancing_model(const Partition& p, PackedSearches packed, std::size_t tau,
                                    ModelOptions options = {});

enum class ConflictKind { NotSimpleInQuotient, Overload };

struct Conflict {
  ConflictKind kind;
  std::vector<ModelEdgeId> offending_edges;
};

/// Checks a model cycle (or s-t path) for repeated quotient pairs and for
/// blocks that would gain nodes and end above ceil(n / k).
std::optional<Conflict> check_cycle(const Partition& p, const AdvancedModel& model,
                                    std::span<const ModelEdgeId> edges);

/// Node moves of the payload edges, in edge order.
std::vector<NodeMove> collect_moves(const AdvancedModel& model, std::span<const ModelEdgeId> edges);

struct SolvedCycle {
  CycleResult cycle;
  std::vector<NodeMove> moves;
  /// Model edges removed while resolving conflicts.
  std::size_t removed_edges = 0;
};

/// Repeatedly looks for a negative cycle through the model, removing one
/// random payload edge of every conflicted cycle, until a conflict-free
/// cycle turns up or none is left. Mutates `model.graph`.
std::optional<SolvedCycle> solve_advanced(const Partition& p, AdvancedModel& model, Rng& rng);

/// Same loop for zero-weight cycles avoiding the source. Requires that the
/// model holds no negative cycle reachable from the source.
std::optional<SolvedCycle> solve_zero_advanced(const Partition& p, AdvancedModel& model, Rng& rng);

/// Applies moves produced by solve_advanced; see apply_node_moves.
AppliedMoves apply_advanced_cycle(const Graph& g, Partition& p, std::span<const NodeMove> moves,
                                  EdgeWeight predicted_delta);

/// Removes a uniformly chosen payload edge among `edges`. Returns false when
/// all of them are structural.
bool remove_random_payload_edge(ModelGraph& graph, std::span<const ModelEdgeId> edges, Rng& rng);

}  // namespace kabar
