#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "kabar/advanced_model.hpp"
#include "kabar/basic_model.hpp"
#include "kabar/directed_search.hpp"
#include "kabar/eligibility.hpp"
#include "kabar/graph.hpp"
#include "kabar/partition.hpp"
#include "kabar/random.hpp"

namespace kabar {

struct BalanceConfig {
  /// Moves per directed local search; 1 gives basic balancing.
  std::size_t tau = 1;
  std::size_t mu = 1;
  bool conflict_free = false;
};

enum class BalanceRoute {
  /// Shortest s-t path through the balancing model.
  ModelPath,
  /// Best single-node-per-hop path over the BFS forest.
  Fallback,
  /// Random relocation across quotient components.
  Component,
};

struct BalanceOutcome {
  BalanceRoute route = BalanceRoute::ModelPath;
  AppliedMoves applied;
  std::size_t overload_before = 0;
  std::size_t overload_after = 0;
};

/// Quotient path from an overloaded block to a block with free capacity
/// together with the single-move searches run along it.
struct IntegratedPath {
  std::vector<BlockId> blocks;
  std::vector<MoveSequence> searches;
};

/// BFS forest over the quotient graph seeded with the overloaded blocks in
/// random order. parent[b] is kInvalidBlock for roots and unreached blocks;
/// reached[b] tells them apart.
struct QuotientForest {
  std::vector<BlockId> parent;
  std::vector<char> reached;

  /// Blocks from the root of b's tree down to b.
  std::vector<BlockId> path_to(BlockId b) const;
};

QuotientForest overload_forest(const Partition& p, std::span<const BlockPair> quotient, Rng& rng);

/// Runs single-move directed searches along a forest path to a random block
/// with free capacity, trying targets in random order until every hop found a
/// node. On failure the searches are discarded and `elig` reset before the
/// next target.
std::optional<IntegratedPath> integrate_path(const Graph& g, Partition& p, EligibilityState& elig,
                                             Rng& rng, const BoundaryIndex& boundary);

/// Tries every forest path from an overloaded block to a block with free
/// capacity, moving one maximum-gain node per hop (moved nodes stay movable),
/// and applies the path that leaves the smallest cut. Lowers the overload
/// by exactly one when any such path exists; returns nothing otherwise.
std::optional<AppliedMoves> fallback_balance(const Graph& g, Partition& p, Rng& rng);

/// Moves one random node to fix a block that no quotient path can serve:
/// out of `block` into a random underloaded block if it is overloaded,
/// otherwise from a random overloaded block into `block`.
AppliedMoves move_random_for_component(const Graph& g, Partition& p, BlockId block, Rng& rng);

/// Lowers the total overload by at least one with minimum cut increase
/// among the paths the balancing model exposes. A no-op (nullopt) when the
/// partition is already perfectly balanced.
std::optional<BalanceOutcome> balance_step(const Graph& g, Partition& p, const BalanceConfig& cfg,
                                           Rng& rng);

}  // namespace kabar
