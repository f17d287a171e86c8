#include "kabar/partition.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace kabar {

std::size_t perfect_capacity(std::size_t n, BlockId k) {
  const auto kk = static_cast<std::size_t>(k);
  return (n + kk - 1) / kk;
}

std::size_t epsilon_capacity(std::size_t n, BlockId k, double epsilon) {
  const double base = static_cast<double>(perfect_capacity(n, k));
  // The slack absorbs representation error, e.g. 1.04 * 25 = 26.000000000000004.
  const double cap = std::ceil((1.0 + epsilon) * base - 1e-9);
  return std::max(perfect_capacity(n, k), static_cast<std::size_t>(cap));
}

EdgeWeight compute_cut(const Graph& g, std::span<const BlockId> assignment) {
  EdgeWeight cut = 0;
  for (NodeId u = 0; u < g.num_nodes(); ++u) {
    const auto nbrs = g.neighbors(u);
    const auto ws = g.weights(u);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      if (u < nbrs[i] && assignment[u] != assignment[nbrs[i]]) cut += ws[i];
    }
  }
  return cut;
}

Partition::Partition(const Graph& g, BlockId k, std::vector<BlockId> assignment, double epsilon)
    : k_(k), assignment_(std::move(assignment)), epsilon_(epsilon) {
  if (k < 1) throw std::invalid_argument("block count must be at least 1");
  if (assignment_.size() != g.num_nodes()) {
    throw std::invalid_argument("assignment has " + std::to_string(assignment_.size()) +
                                " entries, graph has " + std::to_string(g.num_nodes()) + " nodes");
  }
  if (epsilon < 0) throw std::invalid_argument("epsilon must be non-negative");
  sizes_.assign(static_cast<std::size_t>(k), 0);
  for (BlockId b : assignment_) {
    if (b < 0 || b >= k) {
      throw std::invalid_argument("block id " + std::to_string(b) + " outside [0, " +
                                  std::to_string(k) + ")");
    }
    ++sizes_[static_cast<std::size_t>(b)];
  }
  cut_ = compute_cut(g, assignment_);
  perfect_capacity_ = kabar::perfect_capacity(g.num_nodes(), k);
  max_capacity_ = epsilon_capacity(g.num_nodes(), k, epsilon);
}

std::size_t Partition::max_block_size() const {
  return sizes_.empty() ? 0 : *std::max_element(sizes_.begin(), sizes_.end());
}

std::size_t Partition::overload() const {
  std::size_t total = 0;
  for (std::size_t s : sizes_) {
    if (s > perfect_capacity_) total += s - perfect_capacity_;
  }
  return total;
}

void Partition::move(const Graph& g, NodeId v, BlockId to) {
  const BlockId from = assignment_[v];
  if (from == to) return;
  cut_ -= gain(g, *this, v, to);
  assignment_[v] = to;
  --sizes_[static_cast<std::size_t>(from)];
  ++sizes_[static_cast<std::size_t>(to)];
}

void Partition::apply_moves(const Graph& g, std::span<const Move> moves) {
  std::vector<NodeId> nodes;
  nodes.reserve(moves.size());
  for (const Move& m : moves) {
    if (m.node >= num_nodes()) throw std::invalid_argument("move of unknown node");
    if (m.to < 0 || m.to >= k_) throw std::invalid_argument("move target outside [0, k)");
    nodes.push_back(m.node);
  }
  std::sort(nodes.begin(), nodes.end());
  if (std::adjacent_find(nodes.begin(), nodes.end()) != nodes.end()) {
    throw std::invalid_argument("node occurs more than once in move list");
  }
  for (const Move& m : moves) move(g, m.node, m.to);
}

void Partition::check_consistency(const Graph& g) const {
  std::vector<std::size_t> sizes(static_cast<std::size_t>(k_), 0);
  for (BlockId b : assignment_) ++sizes[static_cast<std::size_t>(b)];
  if (sizes != sizes_) throw InvariantError("cached block sizes differ from recount");
  const EdgeWeight cut = compute_cut(g, assignment_);
  if (cut != cut_) {
    throw InvariantError("cached cut " + std::to_string(cut_) + " differs from recount " +
                         std::to_string(cut));
  }
}

EdgeWeight gain(const Graph& g, const Partition& p, NodeId v, BlockId to) {
  const BlockId from = p.block(v);
  if (from == to) throw std::invalid_argument("gain target equals the node's block");
  EdgeWeight external = 0;
  EdgeWeight internal = 0;
  const auto nbrs = g.neighbors(v);
  const auto ws = g.weights(v);
  for (std::size_t i = 0; i < nbrs.size(); ++i) {
    const BlockId b = p.block(nbrs[i]);
    if (b == to) {
      external += ws[i];
    } else if (b == from) {
      internal += ws[i];
    }
  }
  return external - internal;
}

std::vector<BlockPair> quotient_graph(const Graph& g, const Partition& p) {
  std::vector<BlockPair> pairs;
  for (NodeId u = 0; u < g.num_nodes(); ++u) {
    for (NodeId v : g.neighbors(u)) {
      if (p.block(u) != p.block(v)) pairs.push_back({p.block(u), p.block(v)});
    }
  }
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  return pairs;
}

BoundaryIndex::BoundaryIndex(const Graph& g, const Partition& p) {
  struct Entry {
    BlockPair pair;
    NodeId node;
  };
  std::vector<Entry> entries;
  std::vector<BlockId> seen;
  for (NodeId u = 0; u < g.num_nodes(); ++u) {
    seen.clear();
    const BlockId own = p.block(u);
    for (NodeId v : g.neighbors(u)) {
      const BlockId b = p.block(v);
      if (b != own && std::find(seen.begin(), seen.end(), b) == seen.end()) {
        seen.push_back(b);
        entries.push_back({{own, b}, u});
      }
    }
  }
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    return a.pair != b.pair ? a.pair < b.pair : a.node < b.node;
  });
  nodes_.reserve(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i == 0 || entries[i].pair != entries[i - 1].pair) {
      pairs_.push_back(entries[i].pair);
      offsets_.push_back(i);
    }
    nodes_.push_back(entries[i].node);
  }
  offsets_.push_back(entries.size());
}

std::span<const NodeId> BoundaryIndex::candidates(BlockPair pair) const {
  const auto it = std::lower_bound(pairs_.begin(), pairs_.end(), pair);
  if (it == pairs_.end() || *it != pair) return {};
  const auto i = static_cast<std::size_t>(it - pairs_.begin());
  return {nodes_.data() + offsets_[i], nodes_.data() + offsets_[i + 1]};
}

}  // namespace kabar
