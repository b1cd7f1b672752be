#include "wdg/dyn_mst.hpp"

#include <algorithm>
#include <utility>

#include "wdg/error.hpp"
#include "wdg/oracles.hpp"
#include "wdg/union_find.hpp"

namespace wdg {

DynamicMst::DynamicMst(WeightedGraph graph) : graph_(std::move(graph)) {
  if (graph_.directed()) throw ArgumentError("MST needs an undirected graph");
  const auto initial = oracles::kruskal_mst(graph_);
  in_tree_.assign(graph_.edge_count(), 0);
  tree_adj_.assign(graph_.node_count() + 1, {});
  for (EdgeId e : initial.edges) link(e);
  weight_ = initial.weight;
}

void DynamicMst::link(EdgeId e) {
  in_tree_[e] = 1;
  const Edge& edge = graph_.edge(e);
  tree_adj_[edge.u].push_back(e);
  tree_adj_[edge.v].push_back(e);
}

void DynamicMst::cut(EdgeId e) {
  in_tree_[e] = 0;
  const Edge& edge = graph_.edge(e);
  for (NodeId x : {edge.u, edge.v}) {
    auto& list = tree_adj_[x];
    auto it = std::find(list.begin(), list.end(), e);
    *it = list.back();
    list.pop_back();
  }
}

std::vector<EdgeId> DynamicMst::tree_edges() const {
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < in_tree_.size(); ++e) {
    if (in_tree_[e]) out.push_back(e);
  }
  return out;
}

std::vector<EdgeId> DynamicMst::tree_path(NodeId a, NodeId b, WorkCounters& work) const {
  constexpr EdgeId kNone = static_cast<EdgeId>(-1);
  std::vector<EdgeId> via(graph_.node_count() + 1, kNone);
  std::vector<NodeId> stack{a};
  std::vector<char> seen(graph_.node_count() + 1, 0);
  seen[a] = 1;
  while (!stack.empty() && !seen[b]) {
    const NodeId x = stack.back();
    stack.pop_back();
    ++work.nodes_touched;
    for (EdgeId e : tree_adj_[x]) {
      ++work.edges_scanned;
      const NodeId y = graph_.edge(e).other(x);
      if (seen[y]) continue;
      seen[y] = 1;
      via[y] = e;
      stack.push_back(y);
    }
  }
  std::vector<EdgeId> path;
  if (!seen[b]) return path;
  for (NodeId x = b; x != a;) {
    path.push_back(via[x]);
    x = graph_.edge(via[x]).other(x);
  }
  return path;
}

void DynamicMst::on_nontree_decrease(EdgeId e) {
  const Edge& edge = graph_.edge(e);
  const auto path = tree_path(edge.u, edge.v, last_);
  EdgeId heaviest = path.front();
  for (EdgeId f : path) {
    if (graph_.weight(f) > graph_.weight(heaviest)) heaviest = f;
  }
  if (graph_.weight(heaviest) > edge.w) {
    cut(heaviest);
    link(e);
    weight_ += edge.w - graph_.weight(heaviest);
  }
}

void DynamicMst::on_tree_increase(EdgeId e) {
  cut(e);
  // Mark the component of e.u in the forest.
  std::vector<char> side(graph_.node_count() + 1, 0);
  std::vector<NodeId> stack{graph_.edge(e).u};
  side[stack.back()] = 1;
  while (!stack.empty()) {
    const NodeId x = stack.back();
    stack.pop_back();
    ++last_.nodes_touched;
    for (EdgeId f : tree_adj_[x]) {
      ++last_.edges_scanned;
      const NodeId y = graph_.edge(f).other(x);
      if (!side[y]) {
        side[y] = 1;
        stack.push_back(y);
      }
    }
  }
  EdgeId best = e;
  for (EdgeId f = 0; f < graph_.edge_count(); ++f) {
    ++last_.edges_scanned;
    if (in_tree_[f] || f == e) continue;
    const Edge& cand = graph_.edge(f);
    if (side[cand.u] == side[cand.v]) continue;
    if (graph_.weight(f) < graph_.weight(best)) best = f;
  }
  link(best);
  weight_ += graph_.weight(best) - graph_.weight(e);
}

void DynamicMst::apply(const WeightChange& change) {
  const EdgeId e = graph_.require_edge(change.u, change.v);
  graph_.apply_delta(e, change.delta);
  last_ = {};
  ++changes_applied_;
  last_.nodes_touched += 2;
  if (in_tree_[e]) {
    weight_ += change.delta;
    if (change.delta > 0) on_tree_increase(e);
  } else if (change.delta < 0) {
    on_nontree_decrease(e);
  }
  total_ += last_;
}

void DynamicMst::check_invariants() const {
  const std::size_t n = graph_.node_count();
  UnionFind uf(n + 1);
  Weight total = 0;
  std::size_t count = 0;
  for (EdgeId e = 0; e < graph_.edge_count(); ++e) {
    if (!in_tree_[e]) continue;
    const Edge& edge = graph_.edge(e);
    if (!uf.unite(edge.u, edge.v)) throw InvariantError("tree contains a cycle");
    total += edge.w;
    ++count;
  }
  if (n > 0 && count != n - 1) throw InvariantError("tree is not spanning");
  if (total != weight_) throw InvariantError("stored tree weight is stale");
  WorkCounters scratch;
  for (EdgeId e = 0; e < graph_.edge_count(); ++e) {
    if (in_tree_[e]) continue;
    const Edge& edge = graph_.edge(e);
    for (EdgeId f : tree_path(edge.u, edge.v, scratch)) {
      if (graph_.weight(f) > edge.w) {
        throw InvariantError("cycle optimality broken by non-tree edge " + std::to_string(e));
      }
    }
  }
}

namespace {

WeightedGraph complete_graph(std::size_t n, std::size_t max_nodes) {
  if (n == 0) throw ArgumentError("adapter needs at least one node");
  if (n > max_nodes) {
    throw ArgumentError("adapter size guard: n = " + std::to_string(n) + " exceeds " +
                        std::to_string(max_nodes));
  }
  WeightedGraph k(Orientation::kUndirected, n, 2);
  for (NodeId u = 1; u <= n; ++u) {
    for (NodeId v = u + 1; v <= n; ++v) k.add_edge(u, v, 2);
  }
  return k;
}

}  // namespace

ConnectivityAdapter::ConnectivityAdapter(std::size_t n, std::size_t max_nodes)
    : n_(n), mst_(complete_graph(n, max_nodes)) {}

std::pair<NodeId, NodeId> ConnectivityAdapter::normalize(NodeId u, NodeId v) const {
  if (u < 1 || u > n_ || v < 1 || v > n_) throw ArgumentError("node outside 1..n");
  if (u == v) throw ArgumentError("adapter edges need u != v");
  return {std::min(u, v), std::max(u, v)};
}

bool ConnectivityAdapter::has_edge(NodeId u, NodeId v) const {
  return shadow_.count(normalize(u, v)) != 0;
}

void ConnectivityAdapter::add_edge(NodeId u, NodeId v) {
  const auto key = normalize(u, v);
  if (shadow_.count(key)) throw StateError("edge already present");
  mst_.apply({key.first, key.second, -1});
  shadow_.insert(key);
}

void ConnectivityAdapter::remove_edge(NodeId u, NodeId v) {
  const auto key = normalize(u, v);
  if (!shadow_.count(key)) throw StateError("edge not present");
  mst_.apply({key.first, key.second, +1});
  shadow_.erase(key);
}

void ConnectivityAdapter::check_invariants() const {
  for (const Edge& e : mst_.graph().edges()) {
    const Weight expected = shadow_.count({e.u, e.v}) ? 1 : 2;
    if (e.w != expected) throw InvariantError("adapter weight out of sync with edge set");
  }
}

}  // namespace wdg
