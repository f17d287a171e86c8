#include "kabar/directed_search.hpp"

#include <algorithm>
#include <queue>
#include <unordered_map>
#include <unordered_set>

namespace kabar {
namespace {

struct QueueEntry {
  EdgeWeight gain;
  std::uint64_t tiebreak;
  NodeId node;

  bool operator<(const QueueEntry& o) const {
    return gain != o.gain ? gain < o.gain : tiebreak < o.tiebreak;
  }
};

}  // namespace

MoveSequence directed_local_search(const Graph& g, Partition& p, BlockPair pair, std::size_t tau,
                                   EligibilityState& elig, Rng& rng,
                                   std::span<const NodeId> candidates) {
  MoveSequence seq;
  seq.pair = pair;
  if (tau == 0) return seq;

  NodeId start = 0;
  EdgeWeight start_gain = 0;
  std::size_t ties = 0;
  for (NodeId v : candidates) {
    if (!elig.eligible(v) || p.block(v) != pair.from) continue;
    const EdgeWeight gv = gain(g, p, v, pair.to);
    if (ties == 0 || gv > start_gain) {
      start = v;
      start_gain = gv;
      ties = 1;
    } else if (gv == start_gain && rng.index(++ties) == 0) {
      start = v;
    }
  }
  if (ties == 0) return seq;

  // Keys are fixed at insertion; a node whose gain changes is pushed again
  // and the outdated entries are skipped when popped.
  std::priority_queue<QueueEntry> queue;
  std::unordered_map<NodeId, EdgeWeight> key;
  std::unordered_set<NodeId> moved;
  queue.push({start_gain, rng.next(), start});
  key[start] = start_gain;

  EdgeWeight total = 0;
  while (seq.size() < tau && !queue.empty()) {
    const QueueEntry top = queue.top();
    queue.pop();
    if (moved.contains(top.node) || key[top.node] != top.gain || !elig.eligible(top.node)) {
      continue;
    }
    const EdgeWeight step = gain(g, p, top.node, pair.to);
    p.move(g, top.node, pair.to);
    moved.insert(top.node);
    total += step;
    seq.nodes.push_back(top.node);
    seq.prefix_gains.push_back(total);

    for (NodeId u : g.neighbors(top.node)) {
      if (p.block(u) != pair.from || !elig.eligible(u) || moved.contains(u)) continue;
      const EdgeWeight gu = gain(g, p, u, pair.to);
      const auto it = key.find(u);
      if (it == key.end() || it->second != gu) {
        key[u] = gu;
        queue.push({gu, rng.next(), u});
      }
    }
  }

  for (auto it = seq.nodes.rbegin(); it != seq.nodes.rend(); ++it) p.move(g, *it, pair.from);
  for (NodeId v : seq.nodes) elig.mark(g, v);
  return seq;
}

MoveSequence directed_local_search(const Graph& g, Partition& p, BlockPair pair, std::size_t tau,
                                   EligibilityState& elig, Rng& rng) {
  std::vector<NodeId> candidates;
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    if (p.block(v) != pair.from) continue;
    const auto nbrs = g.neighbors(v);
    if (std::any_of(nbrs.begin(), nbrs.end(), [&](NodeId u) { return p.block(u) == pair.to; })) {
      candidates.push_back(v);
    }
  }
  return directed_local_search(g, p, pair, tau, elig, rng, candidates);
}

PackedSearches::PackedSearches(std::span<const BlockPair> pairs) {
  for (const BlockPair& pair : pairs) pairs_.push_back({pair, {}, {}});
  std::sort(pairs_.begin(), pairs_.end(),
            [](const PackedPair& a, const PackedPair& b) { return a.pair < b.pair; });
}

const PackedPair* PackedSearches::find(BlockPair pair) const {
  const auto it = std::lower_bound(pairs_.begin(), pairs_.end(), pair,
                                   [](const PackedPair& a, BlockPair b) { return a.pair < b; });
  return it != pairs_.end() && it->pair == pair ? &*it : nullptr;
}

void PackedSearches::add(MoveSequence seq) {
  if (seq.empty()) return;
  auto it = std::lower_bound(pairs_.begin(), pairs_.end(), seq.pair,
                             [](const PackedPair& a, BlockPair b) { return a.pair < b; });
  if (it == pairs_.end() || it->pair != seq.pair) it = pairs_.insert(it, {seq.pair, {}, {}});

  PackedPair& entry = *it;
  const std::size_t index = entry.searches.size();
  for (std::size_t d = 1; d <= seq.size(); ++d) {
    if (d > entry.best.size()) {
      entry.best.push_back(index);
    } else if (seq.prefix_gain(d) > entry.best_gain(d)) {
      entry.best[d - 1] = index;
    }
  }
  entry.searches.push_back(std::move(seq));
}

PackedSearches pack_searches(const Graph& g, Partition& p, std::span<const BlockPair> pairs,
                             std::size_t tau, std::size_t mu, EligibilityState& elig, Rng& rng,
                             const BoundaryIndex& boundary) {
  PackedSearches packed(pairs);
  std::vector<BlockPair> order(pairs.begin(), pairs.end());
  for (std::size_t round = 0; round < mu; ++round) {
    rng.shuffle(order);
    for (const BlockPair pair : order) {
      MoveSequence seq =
          directed_local_search(g, p, pair, tau, elig, rng, boundary.candidates(pair));
      seq.round = round;
      packed.add(std::move(seq));
    }
  }
  return packed;
}

}  // namespace kabar
