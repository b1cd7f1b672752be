#pragma once

// Test-only oracles. Each one is deliberately naive and shares no code with
// the library solvers it checks.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "wdg/graph.hpp"

namespace brute {

using wdg::Edge;
using wdg::NodeId;
using wdg::Weight;
using wdg::WeightedGraph;

inline constexpr Weight kNone = std::numeric_limits<Weight>::max();

// Minimum weight over all simple s-t paths, by DFS. kNone when unreachable.
inline Weight shortest_path(const WeightedGraph& g, NodeId s, NodeId t) {
  std::vector<char> on(g.node_count() + 1, 0);
  Weight best = kNone;
  std::function<void(NodeId, Weight)> dfs = [&](NodeId x, Weight d) {
    if (d >= best) return;
    if (x == t) {
      best = d;
      return;
    }
    on[x] = 1;
    for (auto id : g.incident(x)) {
      const Edge& e = g.edge(id);
      if (g.directed() && e.u != x) continue;
      const NodeId y = e.other(x);
      if (!on[y]) dfs(y, d + e.w);
    }
    on[x] = 0;
  };
  dfs(s, 0);
  return best;
}

// Minimum s-t cut capacity over all node subsets containing s but not t.
inline Weight min_cut(const WeightedGraph& g, NodeId s, NodeId t) {
  const std::size_t n = g.node_count();
  std::vector<NodeId> free_nodes;
  for (NodeId v = 1; v <= n; ++v) {
    if (v != s && v != t) free_nodes.push_back(v);
  }
  Weight best = kNone;
  std::vector<char> in_s(n + 1, 0);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free_nodes.size()); ++mask) {
    std::fill(in_s.begin(), in_s.end(), 0);
    in_s[s] = 1;
    for (std::size_t i = 0; i < free_nodes.size(); ++i) {
      if ((mask >> i) & 1U) in_s[free_nodes[i]] = 1;
    }
    Weight cut = 0;
    for (const Edge& e : g.edges()) {
      if (in_s[e.u] && !in_s[e.v]) cut += e.w;
      if (!g.directed() && in_s[e.v] && !in_s[e.u]) cut += e.w;
    }
    best = std::min(best, cut);
  }
  return best;
}

// Minimum spanning tree weight over all (n-1)-edge subsets. kNone when the
// graph is disconnected.
inline Weight min_spanning_tree(const WeightedGraph& g) {
  const std::size_t n = g.node_count();
  const std::size_t m = g.edge_count();
  if (n <= 1) return 0;
  Weight best = kNone;
  std::vector<std::size_t> pick;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (pick.size() == n - 1) {
      std::vector<NodeId> parent(n + 1);
      std::iota(parent.begin(), parent.end(), 0);
      std::function<NodeId(NodeId)> root = [&](NodeId x) {
        return parent[x] == x ? x : parent[x] = root(parent[x]);
      };
      Weight w = 0;
      for (auto id : pick) {
        const Edge& e = g.edge(id);
        const NodeId a = root(e.u), b = root(e.v);
        if (a == b) return;
        parent[a] = b;
        w += e.w;
      }
      best = std::min(best, w);
      return;
    }
    for (std::size_t i = from; i + (n - 1 - pick.size()) <= m; ++i) {
      pick.push_back(i);
      rec(i + 1);
      pick.pop_back();
    }
  };
  rec(0);
  return best;
}

// Maximum over edge subsets that form a matching. Needs m <= 22.
inline Weight max_weight_matching(const WeightedGraph& g) {
  const std::size_t m = g.edge_count();
  Weight best = 0;
  std::vector<char> used(g.node_count() + 1, 0);
  std::function<void(std::size_t, Weight)> rec = [&](std::size_t i, Weight w) {
    if (i == m) {
      best = std::max(best, w);
      return;
    }
    rec(i + 1, w);
    const Edge& e = g.edge(i);
    if (!used[e.u] && !used[e.v]) {
      used[e.u] = used[e.v] = 1;
      rec(i + 1, w + e.w);
      used[e.u] = used[e.v] = 0;
    }
  };
  rec(0, 0);
  return best;
}

inline std::size_t max_cardinality_matching(std::size_t n,
                                            const std::vector<std::pair<NodeId, NodeId>>& edges) {
  std::size_t best = 0;
  std::vector<char> used(n + 1, 0);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t size) {
    best = std::max(best, size);
    if (i == edges.size() || size + (edges.size() - i) <= best) return;
    rec(i + 1, size);
    auto [a, b] = edges[i];
    if (!used[a] && !used[b]) {
      used[a] = used[b] = 1;
      rec(i + 1, size + 1);
      used[a] = used[b] = 0;
    }
  };
  rec(0, 0);
  return best;
}

// Sum of finishing times minimized over every processing order.
inline Weight order_cost(std::vector<Weight> times) {
  std::sort(times.begin(), times.end());
  Weight best = kNone;
  do {
    Weight clock = 0, sum = 0;
    for (Weight w : times) sum += (clock += w);
    best = std::min(best, sum);
  } while (std::next_permutation(times.begin(), times.end()));
  return times.empty() ? 0 : best;
}

// Minimum semi-matching cost over every assignment of tasks to neighbors.
inline Weight semi_matching(const WeightedGraph& g) {
  const auto sides = *g.bipartition();
  std::vector<std::vector<std::pair<NodeId, Weight>>> options(sides.left + 1);
  for (const Edge& e : g.edges()) options[e.u].emplace_back(e.v, e.w);
  std::vector<std::vector<Weight>> load(g.node_count() + 1);
  Weight best = kNone;
  std::function<void(NodeId)> rec = [&](NodeId l) {
    if (l > sides.left) {
      Weight total = 0;
      for (NodeId r = sides.left + 1; r <= g.node_count(); ++r) total += order_cost(load[r]);
      best = std::min(best, total);
      return;
    }
    for (auto [r, w] : options[l]) {
      load[r].push_back(w);
      rec(l + 1);
      load[r].pop_back();
    }
  };
  rec(1);
  return best;
}

// Hand-rolled generators.

inline WeightedGraph graph(std::mt19937_64& rng, std::size_t n, double p, Weight w_max,
                           bool connected, bool directed = false) {
  WeightedGraph g(directed ? wdg::Orientation::kDirected : wdg::Orientation::kUndirected, n,
                  w_max);
  std::uniform_int_distribution<Weight> weight(1, w_max);
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<NodeId, NodeId>> chosen;
  if (connected) {
    std::vector<NodeId> order(n);
    std::iota(order.begin(), order.end(), 1);
    std::shuffle(order.begin(), order.end(), rng);
    for (std::size_t i = 1; i < n; ++i) {
      const NodeId a = order[i];
      const NodeId b = order[std::uniform_int_distribution<std::size_t>(0, i - 1)(rng)];
      chosen.emplace_back(std::min(a, b), std::max(a, b));
    }
  }
  for (NodeId u = 1; u <= n; ++u) {
    for (NodeId v = directed ? 1 : u + 1; v <= n; ++v) {
      if (u == v || !coin(rng)) continue;
      const std::pair<NodeId, NodeId> key{directed ? u : std::min(u, v),
                                          directed ? v : std::max(u, v)};
      if (std::find(chosen.begin(), chosen.end(), key) == chosen.end()) chosen.push_back(key);
    }
  }
  for (auto [u, v] : chosen) g.add_edge(u, v, weight(rng));
  return g;
}

inline WeightedGraph bipartite(std::mt19937_64& rng, std::size_t left, std::size_t right,
                               double p, Weight w_max) {
  auto g = WeightedGraph::bipartite(left, right, w_max);
  std::uniform_int_distribution<Weight> weight(1, w_max);
  std::bernoulli_distribution coin(p);
  for (NodeId l = 1; l <= left; ++l) {
    for (NodeId r = left + 1; r <= left + right; ++r) {
      if (coin(rng)) g.add_edge(l, r, weight(rng));
    }
  }
  return g;
}

// A feasible +-1..bound change on a random edge of g, applied to nothing.
inline wdg::WeightChange change(std::mt19937_64& rng, const WeightedGraph& g, Weight bound = 1) {
  std::uniform_int_distribution<std::size_t> pick(0, g.edge_count() - 1);
  while (true) {
    const Edge& e = g.edge(pick(rng));
    const Weight lo = std::max<Weight>(-bound, 1 - e.w);
    const Weight hi = std::min<Weight>(bound, g.max_weight() - e.w);
    if (lo > hi || (lo == 0 && hi == 0)) continue;
    Weight d = 0;
    while (d == 0) d = std::uniform_int_distribution<Weight>(lo, hi)(rng);
    return {e.u, e.v, d};
  }
}

}  // namespace brute
