#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

#include "kabar/graph.hpp"
#include "kabar/types.hpp"

namespace kabar {

/// ceil(n / k): the block capacity of a perfectly balanced partition.
std::size_t perfect_capacity(std::size_t n, BlockId k);

/// ceil((1 + epsilon) * ceil(n / k)).
std::size_t epsilon_capacity(std::size_t n, BlockId k, double epsilon);

/// Total weight of edges whose endpoints lie in different blocks.
EdgeWeight compute_cut(const Graph& g, std::span<const BlockId> assignment);

/// Block assignment with cached block sizes and cut.
///
/// Node weights are 1, so block sizes are node counts. The partition does not
/// keep a reference to its graph; mutating calls take the graph explicitly.
class Partition {
 public:
  Partition() = default;

  /// Throws std::invalid_argument if k < 1, the assignment length differs
  /// from the node count, or an id lies outside [0, k).
  Partition(const Graph& g, BlockId k, std::vector<BlockId> assignment, double epsilon = 0.0);

  BlockId k() const { return k_; }
  std::size_t num_nodes() const { return assignment_.size(); }
  BlockId block(NodeId v) const { return assignment_[v]; }
  std::span<const BlockId> assignment() const { return assignment_; }

  std::size_t block_size(BlockId b) const { return sizes_[static_cast<std::size_t>(b)]; }
  std::span<const std::size_t> block_sizes() const { return sizes_; }
  std::size_t max_block_size() const;

  EdgeWeight cut() const { return cut_; }
  double epsilon() const { return epsilon_; }

  /// ceil(n / k).
  std::size_t perfect_capacity() const { return perfect_capacity_; }
  /// ceil((1 + epsilon) * ceil(n / k)).
  std::size_t max_capacity() const { return max_capacity_; }

  /// Nodes block b can still take before exceeding ceil(n / k); negative when
  /// the block is overloaded.
  std::int64_t slack(BlockId b) const {
    return static_cast<std::int64_t>(perfect_capacity_) -
           static_cast<std::int64_t>(block_size(b));
  }
  bool overloaded(BlockId b) const { return slack(b) < 0; }

  /// Sum over blocks of max(0, size - ceil(n / k)).
  std::size_t overload() const;
  bool perfectly_balanced() const { return overload() == 0; }

  /// Moves v to block `to`, updating sizes and cut incrementally.
  void move(const Graph& g, NodeId v, BlockId to);

  /// Applies the moves in order. Throws std::invalid_argument (before
  /// touching any state) if a node occurs twice or a target is out of range.
  void apply_moves(const Graph& g, std::span<const Move> moves);

  /// Recounts sizes and cut; throws InvariantError on any mismatch.
  void check_consistency(const Graph& g) const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  BlockId k_ = 0;
  std::vector<BlockId> assignment_;
  std::vector<std::size_t> sizes_;
  EdgeWeight cut_ = 0;
  double epsilon_ = 0.0;
  std::size_t perfect_capacity_ = 0;
  std::size_t max_capacity_ = 0;
};

/// Cut reduction when v moves from its block to `to`. `to` must differ from
/// the current block of v (std::invalid_argument otherwise).
EdgeWeight gain(const Graph& g, const Partition& p, NodeId v, BlockId to);

/// Ordered pair of blocks; a directed edge of the quotient graph.
struct BlockPair {
  BlockId from = 0;
  BlockId to = 0;

  friend auto operator<=>(const BlockPair&, const BlockPair&) = default;
};

/// Both directions of every adjacent block pair, sorted, without duplicates.
std::vector<BlockPair> quotient_graph(const Graph& g, const Partition& p);

/// Boundary nodes grouped by directed block pair: for (A, B) the nodes of A
/// with at least one neighbor in B. Snapshot of one partition state.
class BoundaryIndex {
 public:
  BoundaryIndex(const Graph& g, const Partition& p);

  /// Directed quotient edges, sorted.
  std::span<const BlockPair> pairs() const { return pairs_; }

  /// Nodes of pair.from adjacent to pair.to; empty for non-adjacent pairs.
  std::span<const NodeId> candidates(BlockPair pair) const;

 private:
  std::vector<BlockPair> pairs_;
  std::vector<std::size_t> offsets_;
  std::vector<NodeId> nodes_;
};

}  // namespace kabar
