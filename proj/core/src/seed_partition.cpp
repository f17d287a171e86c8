#include "kabar/seed_partition.hpp"

#include <deque>
#include <numeric>
#include <stdexcept>

namespace kabar {

Partition seed_partition(const Graph& g, BlockId k, double epsilon, Rng& rng) {
  const std::size_t n = g.num_nodes();
  if (k < 1) throw std::invalid_argument("block count must be at least 1");
  if (static_cast<std::size_t>(k) > n) throw std::invalid_argument("more blocks than nodes");
  const std::size_t cap = epsilon_capacity(n, k, epsilon);
  const auto kk = static_cast<std::size_t>(k);

  std::vector<NodeId> order(n);
  std::iota(order.begin(), order.end(), NodeId{0});
  rng.shuffle(order);

  std::vector<BlockId> assign(n, kInvalidBlock);
  std::vector<std::size_t> size(kk, 0);
  std::vector<std::deque<NodeId>> frontier(kk);
  for (std::size_t b = 0; b < kk; ++b) {
    assign[order[b]] = static_cast<BlockId>(b);
    size[b] = 1;
    frontier[b].push_back(order[b]);
  }

  // Each block keeps a queue of assigned nodes whose neighbors are not yet
  // exhausted; a turn claims the next unassigned neighbor.
  std::vector<std::size_t> cursor(n, 0);
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::size_t b = 0; b < kk; ++b) {
      if (size[b] >= cap) continue;
      auto& q = frontier[b];
      while (!q.empty()) {
        const NodeId v = q.front();
        const auto nbrs = g.neighbors(v);
        while (cursor[v] < nbrs.size() && assign[nbrs[cursor[v]]] != kInvalidBlock) ++cursor[v];
        if (cursor[v] == nbrs.size()) {
          q.pop_front();
          continue;
        }
        const NodeId u = nbrs[cursor[v]];
        assign[u] = static_cast<BlockId>(b);
        ++size[b];
        q.push_back(u);
        grew = true;
        break;
      }
    }
  }

  for (NodeId v : order) {
    if (assign[v] != kInvalidBlock) continue;
    BlockId target = kInvalidBlock;
    for (NodeId u : g.neighbors(v)) {
      const BlockId b = assign[u];
      if (b == kInvalidBlock || size[static_cast<std::size_t>(b)] >= cap) continue;
      if (target == kInvalidBlock ||
          size[static_cast<std::size_t>(b)] < size[static_cast<std::size_t>(target)]) {
        target = b;
      }
    }
    if (target == kInvalidBlock) {
      target = 0;
      for (std::size_t b = 1; b < kk; ++b) {
        if (size[b] < size[static_cast<std::size_t>(target)]) target = static_cast<BlockId>(b);
      }
    }
    assign[v] = target;
    ++size[static_cast<std::size_t>(target)];
  }
  return Partition(g, k, std::move(assign), epsilon);
}

}  // namespace kabar
