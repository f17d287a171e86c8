#include "kabar/cycle_solver.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <string>

namespace kabar {
namespace {

constexpr ModelEdgeId kNoEdge = std::numeric_limits<ModelEdgeId>::max();

// Outcome of one Bellman-Ford run: either a full shortest-path tree or the
// first negative cycle found.
struct SearchOutcome {
  std::vector<EdgeWeight> dist;
  std::vector<char> reached;
  std::vector<ModelEdgeId> parent;
  std::optional<CycleResult> cycle;
};

SearchOutcome bellman_ford(const ModelGraph& mg, ModelNode s) {
  const std::size_t n = mg.num_nodes();
  SearchOutcome out;
  out.dist.assign(n, 0);
  out.reached.assign(n, 0);
  out.parent.assign(n, kNoEdge);

  // Preorder thread of the shortest-path tree as a circular doubly linked
  // list anchored at s; a subtree is the run following its root whose depth
  // exceeds the root's.
  std::vector<ModelNode> next(n), prev(n);
  std::vector<std::size_t> depth(n, 0);
  std::vector<char> in_tree(n, 0), queued(n, 0);
  std::deque<ModelNode> queue;

  out.reached[s] = 1;
  in_tree[s] = 1;
  next[s] = prev[s] = s;
  queue.push_back(s);
  queued[s] = 1;

  auto& dist = out.dist;
  while (!queue.empty()) {
    const ModelNode u = queue.front();
    queue.pop_front();
    queued[u] = 0;
    if (!in_tree[u]) continue;

    for (ModelEdgeId e : mg.out_edges(u)) {
      if (!mg.active(e)) continue;
      const ModelEdge& edge = mg.edge(e);
      const ModelNode v = edge.to;
      const EdgeWeight candidate = dist[u] + edge.weight;
      if (out.reached[v] && candidate >= dist[v]) continue;

      if (out.reached[v] && in_tree[v]) {
        if (v == u) {
          out.cycle = CycleResult{{e}, edge.weight};
          return out;
        }
        const EdgeWeight delta = dist[v] - candidate;
        ModelNode x = next[v];
        ModelNode last = v;
        while (x != s && depth[x] > depth[v]) {
          if (x == u) {
            // u descends from v: the tree path v ~> u closed by e is a cycle.
            std::vector<ModelEdgeId> edges{e};
            for (ModelNode w = u; w != v; w = mg.edge(out.parent[w]).from) {
              edges.push_back(out.parent[w]);
            }
            std::reverse(edges.begin(), edges.end());
            const EdgeWeight weight = total_weight(mg, edges);
            out.cycle = CycleResult{std::move(edges), weight};
            return out;
          }
          in_tree[x] = 0;
          dist[x] -= delta - 1;
          last = x;
          x = next[x];
        }
        // Unlink the run [v, last].
        next[prev[v]] = next[last];
        prev[next[last]] = prev[v];
      }

      dist[v] = candidate;
      out.reached[v] = 1;
      out.parent[v] = e;
      in_tree[v] = 1;
      depth[v] = depth[u] + 1;
      next[v] = next[u];
      prev[v] = u;
      prev[next[u]] = v;
      next[u] = v;
      if (!queued[v]) {
        queued[v] = 1;
        queue.push_back(v);
      }
    }
  }
  return out;
}

}  // namespace

EdgeWeight total_weight(const ModelGraph& mg, std::span<const ModelEdgeId> edges) {
  EdgeWeight w = 0;
  for (ModelEdgeId e : edges) w += mg.edge(e).weight;
  return w;
}

std::optional<CycleResult> detect_negative_cycle(const ModelGraph& mg, ModelNode s) {
  return bellman_ford(mg, s).cycle;
}

Potentials shortest_path_tree(const ModelGraph& mg, ModelNode s) {
  auto outcome = bellman_ford(mg, s);
  if (outcome.cycle) throw NegativeCycleError(std::move(*outcome.cycle));
  return Potentials(std::move(outcome.dist), std::move(outcome.reached),
                    std::move(outcome.parent));
}

std::optional<PathResult> shortest_s_t_path(const ModelGraph& mg, ModelNode s, ModelNode t) {
  auto outcome = bellman_ford(mg, s);
  if (outcome.cycle) throw NegativeCycleError(std::move(*outcome.cycle));
  if (!outcome.reached[t]) return std::nullopt;
  PathResult path;
  for (ModelNode w = t; w != s; w = mg.edge(outcome.parent[w]).from) {
    path.edges.push_back(outcome.parent[w]);
  }
  std::reverse(path.edges.begin(), path.edges.end());
  path.weight = outcome.dist[t];
  return path;
}

std::vector<std::size_t> strongly_connected_components(const ModelGraph& mg,
                                                       std::span<const char> edge_mask,
                                                       std::size_t* count) {
  // Iterative Tarjan.
  constexpr auto kUnvisited = std::numeric_limits<std::size_t>::max();
  const std::size_t n = mg.num_nodes();
  std::vector<std::size_t> index(n, kUnvisited), low(n, 0), comp(n, kUnvisited);
  std::vector<char> on_stack(n, 0);
  std::vector<ModelNode> stack;
  struct Frame {
    ModelNode node;
    std::size_t next_edge;
  };
  std::vector<Frame> call;
  std::size_t counter = 0;
  std::size_t components = 0;

  for (ModelNode root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) continue;
    call.push_back({root, 0});
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!call.empty()) {
      Frame& f = call.back();
      const auto out = mg.out_edges(f.node);
      if (f.next_edge < out.size()) {
        const ModelEdgeId e = out[f.next_edge++];
        if (!edge_mask[e]) continue;
        const ModelNode w = mg.edge(e).to;
        if (index[w] == kUnvisited) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = 1;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.node] = std::min(low[f.node], index[w]);
        }
        continue;
      }
      const ModelNode v = f.node;
      call.pop_back();
      if (!call.empty()) {
        low[call.back().node] = std::min(low[call.back().node], low[v]);
      }
      if (low[v] == index[v]) {
        ModelNode w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          comp[w] = components;
        } while (w != v);
        ++components;
      }
    }
  }
  if (count != nullptr) *count = components;
  return comp;
}

std::optional<CycleResult> find_zero_weight_cycle(const ModelGraph& mg, const Potentials& pi,
                                                  Rng& rng, std::optional<ModelNode> excluded) {
  const std::size_t n = mg.num_nodes();
  std::vector<char> tight(mg.num_edges(), 0);
  for (ModelEdgeId e = 0; e < mg.num_edges(); ++e) {
    if (!mg.active(e)) continue;
    const ModelEdge& edge = mg.edge(e);
    if (!pi.reachable(edge.from) || !pi.reachable(edge.to)) continue;
    if (excluded && (edge.from == *excluded || edge.to == *excluded)) continue;
    if (pi.reduced_cost(mg, e) == 0) tight[e] = 1;
  }

  std::size_t count = 0;
  const auto comp = strongly_connected_components(mg, tight, &count);
  std::vector<std::size_t> comp_size(count, 0);
  for (ModelNode v = 0; v < n; ++v) ++comp_size[comp[v]];

  std::vector<ModelNode> starts;
  for (ModelNode v = 0; v < n; ++v) {
    if (comp_size[comp[v]] > 1) starts.push_back(v);
  }
  if (starts.empty()) return std::nullopt;

  constexpr auto kUnseen = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> position(n, kUnseen);
  std::vector<ModelEdgeId> walk;
  std::vector<ModelEdgeId> choices;
  ModelNode current = starts[rng.index(starts.size())];
  const std::size_t target = comp[current];
  while (position[current] == kUnseen) {
    position[current] = walk.size();
    choices.clear();
    for (ModelEdgeId e : mg.out_edges(current)) {
      if (tight[e] && comp[mg.edge(e).to] == target) choices.push_back(e);
    }
    // Every node of a non-trivial component has an edge back into it.
    const ModelEdgeId e = choices[rng.index(choices.size())];
    walk.push_back(e);
    current = mg.edge(e).to;
  }

  CycleResult cycle;
  cycle.edges.assign(walk.begin() + static_cast<std::ptrdiff_t>(position[current]), walk.end());
  cycle.weight = total_weight(mg, cycle.edges);
  if (cycle.weight != 0) {
    throw InvariantError("zero-reduced-cost cycle has weight " + std::to_string(cycle.weight));
  }
  return cycle;
}

}  // namespace kabar
