#pragma once

#include "kabar/graph.hpp"
#include "kabar/partition.hpp"
#include "kabar/random.hpp"

namespace kabar {

/// Initial partition by BFS region growing.
///
/// k distinct random seed nodes grow round-robin, each block claiming one
/// unassigned frontier node per turn while below ceil((1 + epsilon) *
/// ceil(n / k)). Nodes left over (other components, exhausted frontiers)
/// join the least-loaded adjacent block with room, else the least-loaded
/// block. Throws std::invalid_argument if k < 1 or k > n.
Partition seed_partition(const Graph& g, BlockId k, double epsilon, Rng& rng);

}  // namespace kabar
