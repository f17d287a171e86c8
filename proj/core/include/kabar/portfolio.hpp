#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "kabar/graph.hpp"
#include "kabar/partition.hpp"
#include "kabar/refine.hpp"

namespace kabar {

struct PortfolioConfig {
  std::size_t trials = 1;
  /// Upper end of the per-trial seed imbalance, drawn from [0.005, max_epsilon].
  double max_epsilon = 0.04;
  std::size_t threads = 1;
  /// Draw tau in [1, 30], mu in [1, 20] and lambda in [1, 10] per trial
  /// instead of using the values in `refine`.
  bool randomize_parameters = true;
  /// Mode, seed and flags for every trial; tau/mu/lambda when not randomized.
  RefineConfig refine;
};

struct TrialResult {
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  double epsilon = 0.0;
  std::size_t tau = 0;
  std::size_t mu = 0;
  std::size_t lambda = 0;
  EdgeWeight initial_cut = 0;
  std::size_t initial_max_block = 0;
  Partition partition;
  RefineTrace trace;
  double wall_ms = 0.0;
};

struct PortfolioResult {
  /// Minimum-cut result; ties go to the lowest trial index.
  Partition best;
  std::size_t best_trial = 0;
  std::vector<TrialResult> trials;
  double wall_ms = 0.0;
};

/// Seed for trial `trial` of a portfolio started with `base_seed`.
std::uint64_t trial_seed(std::uint64_t base_seed, std::size_t trial);

/// One pipeline: seed partition with a random imbalance, then refine.
/// With `start` given, the seed partition is skipped and `start` refined.
TrialResult run_trial(const Graph& g, BlockId k, std::size_t trial, const PortfolioConfig& cfg,
                      const Partition* start = nullptr);

/// Runs cfg.trials independent pipelines (concurrently with cfg.threads > 1)
/// and keeps the best. The outcome does not depend on the thread count.
PortfolioResult portfolio_run(const Graph& g, BlockId k, const PortfolioConfig& cfg);

/// Like portfolio_run, but every trial refines the given partition.
PortfolioResult portfolio_refine(const Graph& g, const Partition& start, const PortfolioConfig& cfg);

}  // namespace kabar
