#include "wdg/dyn_sssp.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <utility>

#include "wdg/error.hpp"

namespace wdg {
namespace {

using Item = std::pair<Weight, NodeId>;
using MinHeap = std::priority_queue<Item, std::vector<Item>, std::greater<>>;

}  // namespace

DynamicSssp::DynamicSssp(WeightedGraph graph, NodeId source, NodeId target)
    : graph_(std::move(graph)), source_(source), target_(target) {
  if (graph_.directed()) throw ArgumentError("dynamic SSSP supports undirected graphs only");
  graph_.require_node(source_);
  graph_.require_node(target_);
  initialize();
}

void DynamicSssp::initialize() {
  const std::size_t n = graph_.node_count();
  dist_.assign(n + 1, kInfinity);
  parent_.assign(n + 1, kNoEdge);
  dist_[source_] = 0;
  affected_.assign(n + 1, 0);
  settle({source_}, nullptr);
}

// Dijkstra starting from seeds whose dist_ entries are already tentative. With
// a region, relaxation is confined to nodes flagged there.
void DynamicSssp::settle(std::vector<NodeId> seeds, const std::vector<char>* region) {
  MinHeap heap;
  for (NodeId v : seeds) heap.emplace(dist_[v], v);
  while (!heap.empty()) {
    auto [d, x] = heap.top();
    heap.pop();
    if (d != dist_[x]) continue;
    ++last_.nodes_touched;
    for (EdgeId id : graph_.incident(x)) {
      ++last_.edges_scanned;
      const Edge& e = graph_.edge(id);
      const NodeId y = e.other(x);
      if (region && !(*region)[y]) continue;
      ++last_.nodes_touched;
      if (d + e.w < dist_[y]) {
        dist_[y] = d + e.w;
        parent_[y] = id;
        heap.emplace(dist_[y], y);
      }
    }
  }
}

void DynamicSssp::apply(const WeightChange& change) {
  const EdgeId e = graph_.require_edge(change.u, change.v);
  graph_.apply_delta(e, change.delta);
  last_ = {};
  if (change.delta < 0) {
    on_decrease(e);
  } else if (change.delta > 0) {
    on_increase(e);
  }
  total_ += last_;
}

void DynamicSssp::on_decrease(EdgeId e) {
  const Edge& edge = graph_.edge(e);
  last_.nodes_touched += 2;
  std::vector<NodeId> seeds;
  for (auto [x, y] : {std::pair{edge.u, edge.v}, std::pair{edge.v, edge.u}}) {
    if (dist_[x] != kInfinity && dist_[x] + edge.w < dist_[y]) {
      dist_[y] = dist_[x] + edge.w;
      parent_[y] = e;
      seeds.push_back(y);
    }
  }
  // Only strictly improved nodes are ever pushed, so no region is needed.
  if (!seeds.empty()) settle(std::move(seeds), nullptr);
}

void DynamicSssp::on_increase(EdgeId e) {
  const Edge& edge = graph_.edge(e);
  last_.nodes_touched += 2;
  NodeId child;
  if (parent_[edge.v] == e) {
    child = edge.v;
  } else if (parent_[edge.u] == e) {
    child = edge.u;
  } else {
    return;  // non-tree edge: every tree path is intact
  }

  // Phase 1: walk the subtree below the edge in distance order. A node stays
  // valid if some neighbor outside the affected set is tight for it; such a
  // neighbor has strictly smaller distance, so its status is already final.
  std::vector<char>& affected = affected_;
  std::vector<NodeId> region;
  MinHeap candidates;
  candidates.emplace(dist_[child], child);
  std::vector<NodeId> kids;
  while (!candidates.empty()) {
    const NodeId c = candidates.top().second;
    candidates.pop();
    ++last_.nodes_touched;
    kids.clear();
    std::optional<EdgeId> support;
    for (EdgeId id : graph_.incident(c)) {
      ++last_.edges_scanned;
      ++last_.nodes_touched;
      const Edge& f = graph_.edge(id);
      const NodeId x = f.other(c);
      if (!affected[x] && dist_[x] != kInfinity && dist_[x] + f.w == dist_[c]) {
        support = id;
        break;
      }
      if (parent_[x] == id) kids.push_back(x);
    }
    if (support) {
      parent_[c] = *support;
      continue;
    }
    affected[c] = 1;
    region.push_back(c);
    for (NodeId k : kids) candidates.emplace(dist_[k], k);
  }

  // Phase 2: reset the affected nodes and seed them from valid neighbors.
  for (NodeId c : region) {
    dist_[c] = kInfinity;
    parent_[c] = kNoEdge;
  }
  std::vector<NodeId> seeds;
  for (NodeId c : region) {
    for (EdgeId id : graph_.incident(c)) {
      ++last_.edges_scanned;
      ++last_.nodes_touched;
      const Edge& f = graph_.edge(id);
      const NodeId x = f.other(c);
      if (affected[x] || dist_[x] == kInfinity) continue;
      if (dist_[x] + f.w < dist_[c]) {
        dist_[c] = dist_[x] + f.w;
        parent_[c] = id;
      }
    }
    if (dist_[c] != kInfinity) seeds.push_back(c);
  }

  // Phase 3: Dijkstra inside the affected region.
  settle(std::move(seeds), &affected);
  for (NodeId c : region) affected[c] = 0;
}

std::vector<NodeId> DynamicSssp::query_path() const {
  if (dist_[target_] == kInfinity) throw InfeasibleError("target unreachable from source");
  std::vector<NodeId> path{target_};
  for (NodeId x = target_; x != source_;) {
    x = graph_.edge(parent_[x]).other(x);
    path.push_back(x);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

std::optional<EdgeId> DynamicSssp::parent_edge(NodeId v) const {
  graph_.require_node(v);
  if (parent_[v] == kNoEdge) return std::nullopt;
  return parent_[v];
}

void DynamicSssp::check_invariants() const {
  if (dist_[source_] != 0) throw InvariantError("dist(s) != 0");
  for (EdgeId id = 0; id < graph_.edge_count(); ++id) {
    const Edge& e = graph_.edge(id);
    for (auto [x, y] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
      if (dist_[x] != kInfinity && dist_[y] > dist_[x] + e.w) {
        throw InvariantError("triangle inequality broken on edge " + std::to_string(id));
      }
    }
  }
  for (NodeId v = 1; v <= graph_.node_count(); ++v) {
    if (v == source_) continue;
    if (dist_[v] == kInfinity) {
      if (parent_[v] != kNoEdge) throw InvariantError("unreachable node has a parent");
      continue;
    }
    if (parent_[v] == kNoEdge) throw InvariantError("reachable node without parent");
    const Edge& e = graph_.edge(parent_[v]);
    if (e.u != v && e.v != v) throw InvariantError("parent edge not incident");
    const NodeId p = e.other(v);
    if (dist_[p] == kInfinity || dist_[p] + e.w != dist_[v]) {
      throw InvariantError("parent edge not tight at node " + std::to_string(v));
    }
  }
}

}  // namespace wdg
