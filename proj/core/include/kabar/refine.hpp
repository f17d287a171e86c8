#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "kabar/graph.hpp"
#include "kabar/partition.hpp"

namespace kabar {

enum class RefineMode { Basic, Advanced };

std::string_view to_string(RefineMode mode);

struct RefineConfig {
  /// Maximum moves per directed local search.
  std::size_t tau = 15;
  /// Packing iterations.
  std::size_t mu = 20;
  /// Unsuccessful iterations tolerated before a balancing step (or stop).
  std::size_t lambda = 3;
  RefineMode mode = RefineMode::Advanced;
  bool zero_cycle_diversification = true;
  std::uint64_t seed = 0;
  std::size_t max_zero_cycles_per_solve = 10;
  /// Build advanced models without backward edges between layers.
  bool conflict_free = false;
  /// Recount the cut after every applied step and record it in the trace.
  bool verify = false;

  /// tau = 15 for k <= 8 and 7 otherwise, mu = 20, lambda = 3.
  static RefineConfig defaults_for(BlockId k);

  /// Throws std::invalid_argument unless tau, mu and lambda are positive.
  void validate() const;
};

enum class StepKind { NegativeCycle, ZeroCycle, BalancePath, BalanceFallback, BalanceComponent };

std::string_view to_string(StepKind kind);

struct StepRecord {
  StepKind kind = StepKind::NegativeCycle;
  std::size_t round = 0;
  EdgeWeight predicted_delta = 0;
  EdgeWeight actual_delta = 0;
  /// Full recount difference; equals actual_delta when verification is on,
  /// 0 otherwise.
  EdgeWeight recomputed_delta = 0;
  std::size_t moved_nodes = 0;
  std::size_t overload_after = 0;
};

struct RefineTrace {
  std::vector<StepRecord> steps;
  std::size_t rounds = 0;
  std::size_t balance_steps = 0;
  /// Model constructions (refinement models only).
  std::size_t models_built = 0;
};

/// Perfectly balanced refinement.
///
/// Each iteration rebuilds the model (basic or layered) and applies negative
/// cycles until none is left, interleaving up to max_zero_cycles_per_solve
/// zero-weight cycle moves. An iteration that applied no negative cycle is
/// unsuccessful; after lambda unsuccessful iterations in a row one balancing
/// step runs if the partition is overloaded, otherwise refinement stops.
///
/// The result is perfectly balanced, and its cut never exceeds the input
/// cut when the input was perfectly balanced already.
Partition refine(const Graph& g, Partition p, const RefineConfig& cfg, RefineTrace* trace = nullptr);

}  // namespace kabar
