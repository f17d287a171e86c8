#pragma once

#include <cstddef>
#include <span>

#include "kabar/graph.hpp"
#include "kabar/random.hpp"

namespace kabar {

/// Planar mesh resembling a Delaunay triangulation: a rows x cols grid where
/// every cell is split along a randomly chosen diagonal. Unit weights.
Graph triangulated_grid(std::size_t rows, std::size_t cols, Rng& rng);

/// Triangulated grid with roughly n nodes (rows close to sqrt(n)).
Graph mesh_graph(std::size_t n, Rng& rng);

/// Connected graph: a random spanning tree plus `extra_edges` random edges.
/// Weights are drawn from [1, max_weight].
Graph random_connected_graph(std::size_t n, std::size_t extra_edges, EdgeWeight max_weight, Rng& rng);

/// Disjoint union; node ids of later parts are shifted past earlier ones.
Graph disjoint_union(std::span<const Graph> parts);

}  // namespace kabar
