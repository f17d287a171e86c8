#include "kabar/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace kabar {

Graph Graph::from_edges(std::size_t num_nodes, std::span<const WeightedEdge> edges) {
  struct Half {
    NodeId from;
    NodeId to;
    EdgeWeight weight;
  };
  std::vector<Half> halves;
  halves.reserve(edges.size() * 2);
  for (const auto& e : edges) {
    if (e.u >= num_nodes || e.v >= num_nodes) {
      throw std::invalid_argument("edge endpoint out of range: {" + std::to_string(e.u) + ", " +
                                  std::to_string(e.v) + "}");
    }
    if (e.weight <= 0) {
      throw std::invalid_argument("edge weight must be positive, got " + std::to_string(e.weight));
    }
    if (e.u == e.v) continue;
    halves.push_back({e.u, e.v, e.weight});
    halves.push_back({e.v, e.u, e.weight});
  }
  std::sort(halves.begin(), halves.end(), [](const Half& a, const Half& b) {
    return a.from != b.from ? a.from < b.from : a.to < b.to;
  });

  Graph g;
  g.offsets_.assign(num_nodes + 1, 0);
  for (std::size_t i = 0; i < halves.size();) {
    std::size_t j = i;
    EdgeWeight w = 0;
    while (j < halves.size() && halves[j].from == halves[i].from && halves[j].to == halves[i].to) {
      w += halves[j].weight;
      ++j;
    }
    g.targets_.push_back(halves[i].to);
    g.weights_.push_back(w);
    ++g.offsets_[halves[i].from + 1];
    g.total_weight_ += w;
    i = j;
  }
  std::partial_sum(g.offsets_.begin(), g.offsets_.end(), g.offsets_.begin());
  g.total_weight_ /= 2;
  return g;
}

EdgeWeight Graph::weighted_degree(NodeId v) const {
  const auto w = weights(v);
  return std::accumulate(w.begin(), w.end(), EdgeWeight{0});
}

std::vector<WeightedEdge> Graph::edges() const {
  std::vector<WeightedEdge> out;
  out.reserve(num_edges());
  for (NodeId u = 0; u < num_nodes(); ++u) {
    const auto nbrs = neighbors(u);
    const auto ws = weights(u);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      if (u < nbrs[i]) out.push_back({u, nbrs[i], ws[i]});
    }
  }
  return out;
}

std::vector<std::size_t> connected_components(const Graph& g, std::size_t* count) {
  constexpr auto kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> comp(g.num_nodes(), kUnset);
  std::vector<NodeId> stack;
  std::size_t next = 0;
  for (NodeId root = 0; root < g.num_nodes(); ++root) {
    if (comp[root] != kUnset) continue;
    comp[root] = next;
    stack.push_back(root);
    while (!stack.empty()) {
      const NodeId v = stack.back();
      stack.pop_back();
      for (NodeId u : g.neighbors(v)) {
        if (comp[u] == kUnset) {
          comp[u] = next;
          stack.push_back(u);
        }
      }
    }
    ++next;
  }
  if (count != nullptr) *count = next;
  return comp;
}

}  // namespace kabar
