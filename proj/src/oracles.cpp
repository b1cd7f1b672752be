#include "wdg/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <queue>

#include "wdg/error.hpp"
#include "wdg/union_find.hpp"

namespace wdg::oracles {
namespace {

// Neighbors reachable from x along e: every edge for undirected graphs, only
// outgoing edges for directed ones.
bool traversable(const WeightedGraph& g, const Edge& e, NodeId x) {
  return !g.directed() || e.u == x;
}

// --- Dinic -----------------------------------------------------------------

class Dinic {
 public:
  explicit Dinic(std::size_t n) : adj_(n + 1), level_(n + 1), next_(n + 1) {}

  // Returns the index of the forward arc; its partner is index ^ 1.
  std::size_t add(NodeId u, NodeId v, Weight cap_forward, Weight cap_backward) {
    const std::size_t id = arcs_.size();
    arcs_.push_back({v, cap_forward});
    arcs_.push_back({u, cap_backward});
    adj_[u].push_back(id);
    adj_[v].push_back(id + 1);
    return id;
  }

  Weight run(NodeId s, NodeId t) {
    Weight total = 0;
    while (bfs(s, t)) {
      std::fill(next_.begin(), next_.end(), 0);
      while (Weight pushed = dfs(s, t, kInfinity)) total += pushed;
    }
    return total;
  }

  Weight residual(std::size_t arc) const { return arcs_[arc].cap; }

 private:
  struct Arc {
    NodeId to;
    Weight cap;
  };

  bool bfs(NodeId s, NodeId t) {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<NodeId> q;
    level_[s] = 0;
    q.push(s);
    while (!q.empty()) {
      const NodeId x = q.front();
      q.pop();
      for (std::size_t id : adj_[x]) {
        const Arc& a = arcs_[id];
        if (a.cap > 0 && level_[a.to] < 0) {
          level_[a.to] = level_[x] + 1;
          q.push(a.to);
        }
      }
    }
    return level_[t] >= 0;
  }

  Weight dfs(NodeId x, NodeId t, Weight limit) {
    if (x == t) return limit;
    for (std::size_t& i = next_[x]; i < adj_[x].size(); ++i) {
      const std::size_t id = adj_[x][i];
      Arc& a = arcs_[id];
      if (a.cap <= 0 || level_[a.to] != level_[x] + 1) continue;
      if (Weight pushed = dfs(a.to, t, std::min(limit, a.cap))) {
        a.cap -= pushed;
        arcs_[id ^ 1].cap += pushed;
        return pushed;
      }
    }
    return 0;
  }

  std::vector<Arc> arcs_;
  std::vector<std::vector<std::size_t>> adj_;
  std::vector<int> level_;
  std::vector<std::size_t> next_;
};

// --- exhaustive matching search ---------------------------------------------

struct Neighbor {
  NodeId to;
  Weight w;
};

// Branch and bound over vertices 1..n in order: each undecided vertex is
// either left unmatched or paired with a later undecided neighbor.
class MatchingSearch {
 public:
  explicit MatchingSearch(std::vector<std::vector<Neighbor>> adj)
      : adj_(std::move(adj)), used_(adj_.size(), false), cap_(adj_.size(), 0) {
    for (std::size_t v = 1; v < adj_.size(); ++v) {
      for (const Neighbor& nb : adj_[v]) cap_[v] = std::max(cap_[v], nb.w);
      remaining_ += cap_[v];
    }
  }

  Weight solve() {
    recurse(1, 0);
    return best_;
  }

 private:
  void recurse(NodeId v, Weight current) {
    while (v < adj_.size() && used_[v]) ++v;
    if (v >= adj_.size()) {
      best_ = std::max(best_, current);
      return;
    }
    // Each matched edge is charged to both endpoints, so half the remaining
    // caps bound the gain.
    if (2 * current + remaining_ <= 2 * best_) return;

    used_[v] = true;
    remaining_ -= cap_[v];
    for (const Neighbor& nb : adj_[v]) {
      if (nb.to <= v || used_[nb.to]) continue;
      used_[nb.to] = true;
      remaining_ -= cap_[nb.to];
      recurse(v + 1, current + nb.w);
      remaining_ += cap_[nb.to];
      used_[nb.to] = false;
    }
    recurse(v + 1, current);
    remaining_ += cap_[v];
    used_[v] = false;
  }

  std::vector<std::vector<Neighbor>> adj_;
  std::vector<bool> used_;
  std::vector<Weight> cap_;
  Weight remaining_ = 0;
  Weight best_ = 0;
};

constexpr double kGuard = 16777216.0;  // 2^24

void check_guard(double bound) {
  if (bound > kGuard) {
    throw SizeGuardError("instance too large for exhaustive search (bound " +
                         std::to_string(bound) + " > 2^24)");
  }
}

std::vector<std::vector<Neighbor>> neighbors_of(const WeightedGraph& g, bool unit) {
  std::vector<std::vector<Neighbor>> adj(g.node_count() + 1);
  for (const Edge& e : g.edges()) {
    const Weight w = unit ? 1 : e.w;
    adj[e.u].push_back({e.v, w});
    adj[e.v].push_back({e.u, w});
  }
  return adj;
}

}  // namespace

PathResult dijkstra(const WeightedGraph& g, NodeId s, NodeId t) {
  g.require_node(s);
  g.require_node(t);
  const std::size_t n = g.node_count();
  std::vector<Weight> dist(n + 1, kInfinity);
  std::vector<NodeId> parent(n + 1, 0);
  using Item = std::pair<Weight, NodeId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  dist[s] = 0;
  heap.emplace(0, s);
  while (!heap.empty()) {
    auto [d, x] = heap.top();
    heap.pop();
    if (d != dist[x]) continue;
    if (x == t) break;
    for (EdgeId id : g.incident(x)) {
      const Edge& e = g.edge(id);
      if (!traversable(g, e, x)) continue;
      const NodeId y = e.other(x);
      if (d + e.w < dist[y]) {
        dist[y] = d + e.w;
        parent[y] = x;
        heap.emplace(dist[y], y);
      }
    }
  }
  PathResult result;
  result.distance = dist[t];
  if (dist[t] != kInfinity) {
    for (NodeId x = t; x != s; x = parent[x]) result.path.push_back(x);
    result.path.push_back(s);
    std::reverse(result.path.begin(), result.path.end());
  }
  return result;
}

Weight dijkstra_dist(const WeightedGraph& g, NodeId s, NodeId t) {
  return dijkstra(g, s, t).distance;
}

std::vector<Weight> dijkstra_all(const WeightedGraph& g, NodeId s) {
  g.require_node(s);
  std::vector<Weight> dist(g.node_count() + 1, kInfinity);
  using Item = std::pair<Weight, NodeId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  dist[s] = 0;
  heap.emplace(0, s);
  while (!heap.empty()) {
    auto [d, x] = heap.top();
    heap.pop();
    if (d != dist[x]) continue;
    for (EdgeId id : g.incident(x)) {
      const Edge& e = g.edge(id);
      if (!traversable(g, e, x)) continue;
      const NodeId y = e.other(x);
      if (d + e.w < dist[y]) {
        dist[y] = d + e.w;
        heap.emplace(dist[y], y);
      }
    }
  }
  return dist;
}

Weight path_weight(const WeightedGraph& g, std::span<const NodeId> path) {
  Weight total = 0;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    total += g.weight(g.require_edge(path[i], path[i + 1]));
  }
  return total;
}

FlowResult static_maxflow(const WeightedGraph& g, NodeId s, NodeId t) {
  g.require_node(s);
  g.require_node(t);
  if (s == t) throw ArgumentError("max flow needs s != t");
  Dinic dinic(g.node_count());
  std::vector<std::size_t> arc_of(g.edge_count());
  for (EdgeId id = 0; id < g.edge_count(); ++id) {
    const Edge& e = g.edge(id);
    arc_of[id] = dinic.add(e.u, e.v, e.w, g.directed() ? 0 : e.w);
  }
  FlowResult result;
  result.value = dinic.run(s, t);
  result.flow.resize(g.edge_count());
  for (EdgeId id = 0; id < g.edge_count(); ++id) {
    result.flow[id] = g.weight(id) - dinic.residual(arc_of[id]);
  }
  return result;
}

Weight evaluate_flow(const WeightedGraph& g, NodeId s, NodeId t,
                     std::span<const Weight> flow) {
  if (flow.size() != g.edge_count()) throw InvariantError("flow vector size mismatch");
  std::vector<Weight> net_out(g.node_count() + 1, 0);
  for (EdgeId id = 0; id < g.edge_count(); ++id) {
    const Edge& e = g.edge(id);
    const Weight f = flow[id];
    const bool ok = g.directed() ? (f >= 0 && f <= e.w) : (f >= -e.w && f <= e.w);
    if (!ok) {
      throw InvariantError("capacity violated on edge " + std::to_string(id) + ": flow " +
                           std::to_string(f) + ", weight " + std::to_string(e.w));
    }
    net_out[e.u] += f;
    net_out[e.v] -= f;
  }
  for (NodeId v = 1; v <= g.node_count(); ++v) {
    if (v != s && v != t && net_out[v] != 0) {
      throw InvariantError("conservation violated at node " + std::to_string(v));
    }
  }
  if (net_out[s] != -net_out[t]) throw InvariantError("source and sink disagree");
  return net_out[s];
}

MstResult kruskal_mst(const WeightedGraph& g) {
  std::vector<EdgeId> order(g.edge_count());
  for (EdgeId i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](EdgeId a, EdgeId b) { return g.weight(a) < g.weight(b); });
  UnionFind uf(g.node_count() + 1);
  MstResult result;
  for (EdgeId id : order) {
    const Edge& e = g.edge(id);
    if (uf.unite(e.u, e.v)) {
      result.weight += e.w;
      result.edges.push_back(id);
    }
  }
  if (g.node_count() > 0 && result.edges.size() != g.node_count() - 1) {
    throw InfeasibleError("graph is disconnected; no spanning tree");
  }
  return result;
}

bool connectivity(std::size_t node_count, std::span<const std::pair<NodeId, NodeId>> edges) {
  if (node_count <= 1) return true;
  UnionFind uf(node_count + 1);
  for (auto [u, v] : edges) uf.unite(u, v);
  // Slot 0 is its own component.
  return uf.components() == 2;
}

bool connectivity(const WeightedGraph& g) {
  std::vector<std::pair<NodeId, NodeId>> edges;
  edges.reserve(g.edge_count());
  for (const Edge& e : g.edges()) edges.emplace_back(e.u, e.v);
  return connectivity(g.node_count(), edges);
}

double matching_count_bound(const WeightedGraph& g) {
  const double subsets = std::pow(2.0, static_cast<double>(g.edge_count()));
  double partner_choices = 1.0;
  for (NodeId v = 1; v <= g.node_count(); ++v) {
    partner_choices *= static_cast<double>(g.degree(v) + 1);
    if (partner_choices > 1e300) break;
  }
  double bound = std::min(subsets, partner_choices);
  if (const auto& bp = g.bipartition()) {
    // sum_k C(a,k) * b!/(b-k)! with a the smaller side.
    const std::size_t a = std::min(bp->left, bp->right);
    const std::size_t b = std::max(bp->left, bp->right);
    double total = 0.0;
    double choose = 1.0;
    double arrange = 1.0;
    for (std::size_t k = 0; k <= a; ++k) {
      total += choose * arrange;
      choose = choose * static_cast<double>(a - k) / static_cast<double>(k + 1);
      arrange *= static_cast<double>(b - k);
    }
    bound = std::min(bound, total);
  }
  return bound;
}

Weight bruteforce_mwm(const WeightedGraph& g) {
  check_guard(matching_count_bound(g));
  return MatchingSearch(neighbors_of(g, false)).solve();
}

std::size_t bruteforce_mcm(const WeightedGraph& g) {
  check_guard(matching_count_bound(g));
  return static_cast<std::size_t>(MatchingSearch(neighbors_of(g, true)).solve());
}

std::size_t bruteforce_mcm(std::size_t node_count,
                           std::span<const std::pair<NodeId, NodeId>> edges) {
  WeightedGraph g(Orientation::kUndirected, node_count, 1);
  for (auto [u, v] : edges) {
    if (!g.find_edge(u, v)) g.add_edge(u, v, 1);
  }
  return bruteforce_mcm(g);
}

Weight bruteforce_b_matching(const WeightedGraph& g, std::span<const std::int64_t> b) {
  if (b.size() != g.node_count() + 1) {
    throw ArgumentError("b-vector must have one entry per node (index 0 unused)");
  }
  for (NodeId v = 1; v <= g.node_count(); ++v) {
    if (b[v] < 0) throw ArgumentError("b_v must be nonnegative");
  }
  if (g.edge_count() > 24) throw SizeGuardError("b-matching brute force needs m <= 24");

  const auto edges = g.edges();
  std::vector<std::int64_t> room(b.begin(), b.end());
  std::vector<Weight> suffix(edges.size() + 1, 0);
  for (std::size_t i = edges.size(); i-- > 0;) suffix[i] = suffix[i + 1] + edges[i].w;

  Weight best = 0;
  std::function<void(std::size_t, Weight)> recurse = [&](std::size_t i, Weight current) {
    if (current + suffix[i] <= best) {
      best = std::max(best, current);
      return;
    }
    if (i == edges.size()) {
      best = std::max(best, current);
      return;
    }
    const Edge& e = edges[i];
    if (room[e.u] > 0 && room[e.v] > 0) {
      --room[e.u];
      --room[e.v];
      recurse(i + 1, current + e.w);
      ++room[e.u];
      ++room[e.v];
    }
    recurse(i + 1, current);
  };
  recurse(0, 0);
  return best;
}

std::vector<std::size_t> min_cost_assignment(std::span<const Weight> cost, std::size_t rows,
                                             std::size_t cols) {
  if (rows > cols) throw ArgumentError("assignment needs rows <= cols");
  if (cost.size() != rows * cols) throw ArgumentError("cost matrix has the wrong size");
  constexpr Weight kBig = std::numeric_limits<Weight>::max() / 4;
  std::vector<Weight> row_pot(rows + 1, 0), col_pot(cols + 1, 0);
  std::vector<std::size_t> owner(cols + 1, 0), way(cols + 1, 0);
  for (std::size_t i = 1; i <= rows; ++i) {
    owner[0] = i;
    std::size_t j0 = 0;
    std::vector<Weight> best(cols + 1, kBig);
    std::vector<char> used(cols + 1, 0);
    do {
      used[j0] = 1;
      const std::size_t i0 = owner[j0];
      Weight delta = kBig;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= cols; ++j) {
        if (used[j]) continue;
        const Weight cur = cost[(i0 - 1) * cols + (j - 1)] - row_pot[i0] - col_pot[j];
        if (cur < best[j]) {
          best[j] = cur;
          way[j] = j0;
        }
        if (best[j] < delta) {
          delta = best[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= cols; ++j) {
        if (used[j]) {
          row_pot[owner[j]] += delta;
          col_pot[j] -= delta;
        } else {
          best[j] -= delta;
        }
      }
      j0 = j1;
    } while (owner[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      owner[j0] = owner[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  std::vector<std::size_t> column(rows, 0);
  for (std::size_t j = 1; j <= cols; ++j) {
    if (owner[j] != 0) column[owner[j] - 1] = j - 1;
  }
  return column;
}


Weight assignment_mwm(const WeightedGraph& g) {
  if (g.directed() || !g.bipartition()) {
    throw StructuralError("assignment MWM needs an undirected bipartite graph");
  }
  const Bipartition& sides = *g.bipartition();
  const std::size_t rows = std::min(sides.left, sides.right);
  const std::size_t cols = std::max(sides.left, sides.right);
  if (rows == 0) return 0;
  const bool left_rows = sides.left <= sides.right;
  std::vector<Weight> cost(rows * cols, 0);
  for (const Edge& e : g.edges()) {
    const std::size_t l = e.u - 1;
    const std::size_t r = e.v - sides.left - 1;
    const std::size_t i = left_rows ? l : r;
    const std::size_t j = left_rows ? r : l;
    cost[i * cols + j] = -e.w;
  }
  const auto column = min_cost_assignment(cost, rows, cols);
  Weight total = 0;
  for (std::size_t i = 0; i < rows; ++i) total -= cost[i * cols + column[i]];
  return total;
}

}  // namespace wdg::oracles
