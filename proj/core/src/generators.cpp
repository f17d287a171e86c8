#include "kabar/generators.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace kabar {

Graph triangulated_grid(std::size_t rows, std::size_t cols, Rng& rng) {
  const auto id = [cols](std::size_t r, std::size_t c) { return static_cast<NodeId>(r * cols + c); };
  std::vector<WeightedEdge> edges;
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (c + 1 < cols) edges.push_back({id(r, c), id(r, c + 1), 1});
      if (r + 1 < rows) edges.push_back({id(r, c), id(r + 1, c), 1});
      if (r + 1 < rows && c + 1 < cols) {
        if (rng.coin()) {
          edges.push_back({id(r, c), id(r + 1, c + 1), 1});
        } else {
          edges.push_back({id(r, c + 1), id(r + 1, c), 1});
        }
      }
    }
  }
  return Graph::from_edges(rows * cols, edges);
}

Graph mesh_graph(std::size_t n, Rng& rng) {
  if (n == 0) return Graph::from_edges(0, {});
  const auto rows = std::max<std::size_t>(1, static_cast<std::size_t>(std::sqrt(static_cast<double>(n))));
  const std::size_t cols = (n + rows - 1) / rows;
  return triangulated_grid(rows, cols, rng);
}

Graph random_connected_graph(std::size_t n, std::size_t extra_edges, EdgeWeight max_weight, Rng& rng) {
  if (max_weight < 1) throw std::invalid_argument("max_weight must be positive");
  std::vector<NodeId> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<NodeId>(i);
  rng.shuffle(order);
  std::vector<WeightedEdge> edges;
  for (std::size_t i = 1; i < n; ++i) {
    edges.push_back({order[i], order[rng.index(i)], rng.range(1, max_weight)});
  }
  if (n >= 2) {
    for (std::size_t e = 0; e < extra_edges; ++e) {
      const auto u = static_cast<NodeId>(rng.index(n));
      const auto v = static_cast<NodeId>(rng.index(n));
      if (u != v) edges.push_back({u, v, rng.range(1, max_weight)});
    }
  }
  return Graph::from_edges(n, edges);
}

Graph disjoint_union(std::span<const Graph> parts) {
  std::vector<WeightedEdge> edges;
  std::size_t offset = 0;
  for (const Graph& part : parts) {
    for (WeightedEdge e : part.edges()) {
      edges.push_back({static_cast<NodeId>(e.u + offset), static_cast<NodeId>(e.v + offset), e.weight});
    }
    offset += part.num_nodes();
  }
  return Graph::from_edges(offset, edges);
}

}  // namespace kabar
