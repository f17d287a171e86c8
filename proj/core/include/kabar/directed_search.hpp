#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "kabar/eligibility.hpp"
#include "kabar/graph.hpp"
#include "kabar/partition.hpp"
#include "kabar/random.hpp"

namespace kabar {

/// Result of one directed local search: the nodes moved from `pair.from` to
/// `pair.to`, in order, with cumulative gains.
struct MoveSequence {
  BlockPair pair;
  std::vector<NodeId> nodes;
  /// prefix_gains[d - 1] is the cut reduction after the first d moves.
  std::vector<EdgeWeight> prefix_gains;
  /// Packing round that produced the sequence (0-based).
  std::size_t round = 0;

  std::size_t size() const { return nodes.size(); }
  bool empty() const { return nodes.empty(); }
  EdgeWeight prefix_gain(std::size_t d) const { return d == 0 ? 0 : prefix_gains[d - 1]; }
};

/// FM-style search that only moves nodes from pair.from to pair.to.
///
/// Starts at a random maximum-gain eligible node of pair.from adjacent to
/// pair.to, then repeatedly moves the highest-gain queued node, queueing the
/// eligible pair.from neighbors of every moved node. Stops after `tau` moves
/// or when the queue runs dry. All moves are undone before returning and the
/// moved nodes are marked in `elig`. `candidates` are the nodes of pair.from
/// adjacent to pair.to (see BoundaryIndex).
MoveSequence directed_local_search(const Graph& g, Partition& p, BlockPair pair, std::size_t tau,
                                   EligibilityState& elig, Rng& rng,
                                   std::span<const NodeId> candidates);

/// Convenience overload that scans the graph for start candidates.
MoveSequence directed_local_search(const Graph& g, Partition& p, BlockPair pair, std::size_t tau,
                                   EligibilityState& elig, Rng& rng);

/// All searches recorded for one block pair and, for every prefix length d,
/// the search with the largest gain when moving d nodes.
struct PackedPair {
  BlockPair pair;
  std::vector<MoveSequence> searches;
  /// best[d - 1] indexes `searches`.
  std::vector<std::size_t> best;

  std::size_t max_length() const { return best.size(); }
  EdgeWeight best_gain(std::size_t d) const { return searches[best[d - 1]].prefix_gain(d); }
  std::span<const NodeId> best_prefix(std::size_t d) const {
    return std::span<const NodeId>(searches[best[d - 1]].nodes).first(d);
  }
};

class PackedSearches {
 public:
  PackedSearches() = default;
  explicit PackedSearches(std::span<const BlockPair> pairs);

  /// Records a search; empty sequences are ignored. Earlier searches win ties.
  void add(MoveSequence seq);

  std::span<const PackedPair> pairs() const { return pairs_; }
  /// nullptr when the pair was not registered.
  const PackedPair* find(BlockPair pair) const;

 private:
  std::vector<PackedPair> pairs_;
};

/// Runs `mu` rounds of directed local searches, one per pair in a freshly
/// shuffled order each round, sharing `elig` throughout.
PackedSearches pack_searches(const Graph& g, Partition& p, std::span<const BlockPair> pairs,
                             std::size_t tau, std::size_t mu, EligibilityState& elig, Rng& rng,
                             const BoundaryIndex& boundary);

}  // namespace kabar
