#include "wdg/matching.hpp"

#include <algorithm>
#include <utility>

#include "wdg/error.hpp"

namespace wdg {

DynamicMatching::DynamicMatching(WeightedGraph graph) : graph_(std::move(graph)) {
  if (graph_.directed() || !graph_.bipartition()) {
    throw StructuralError("dynamic matching needs an undirected bipartite graph");
  }
  sides_ = *graph_.bipartition();
  const std::size_t n = graph_.node_count();
  mate_.assign(n + 1, 0);
  dual_.assign(n + 1, 0);
  for (const Edge& e : graph_.edges()) {
    if (!sides_.is_left(e.u) || !sides_.is_right(e.v)) {
      throw StructuralError("edge does not cross the bipartition");
    }
    dual_[e.u] = std::max(dual_[e.u], e.w);
  }
  for (NodeId l = 1; l <= sides_.left; ++l) {
    if (is_defect(l)) repair(l);
  }
  last_ = {};
  total_ = {};
  last_searches_ = 0;
}

Weight DynamicMatching::edge_weight(NodeId a, NodeId b) const {
  return graph_.weight(graph_.require_edge(a, b));
}

void DynamicMatching::unmatch(NodeId a) {
  const NodeId b = mate_[a];
  if (b == 0) return;
  weight_ -= edge_weight(a, b);
  mate_[a] = 0;
  mate_[b] = 0;
}

void DynamicMatching::match(NodeId a, NodeId b) {
  weight_ += edge_weight(a, b);
  mate_[a] = b;
  mate_[b] = a;
}

// Hungarian search from a free node with positive dual. Outer nodes lie on
// the root's side and lose dual; inner nodes are matched nodes on the other
// side and gain it. Every step keeps feasibility and tightness of tree edges.
void DynamicMatching::repair(NodeId root) {
  ++last_searches_;
  const std::size_t n = graph_.node_count();
  std::vector<Weight> slack(n + 1, kInfinity);
  std::vector<NodeId> from(n + 1, 0);
  std::vector<char> inner(n + 1, 0);
  std::vector<NodeId> outer_nodes;
  std::vector<NodeId> inner_nodes;
  std::vector<NodeId> frontier;  // other-side nodes with finite slack

  auto grow = [&](NodeId x) {
    outer_nodes.push_back(x);
    ++last_.nodes_touched;
    for (EdgeId id : graph_.incident(x)) {
      ++last_.edges_scanned;
      const Edge& e = graph_.edge(id);
      const NodeId y = e.other(x);
      if (inner[y]) continue;
      const Weight s = dual_[x] + dual_[y] - e.w;
      if (slack[y] == kInfinity) frontier.push_back(y);
      if (s < slack[y]) {
        slack[y] = s;
        from[y] = x;
      }
    }
  };

  // Rematches the alternating path ending at inner node y back to the root.
  auto flip_from = [&](NodeId y) {
    while (true) {
      const NodeId x = from[y];
      const NodeId next = mate_[x];
      unmatch(x);
      match(x, y);
      if (x == root) break;
      y = next;
    }
  };

  grow(root);
  while (true) {
    NodeId zero_node = 0;
    Weight by_dual = kInfinity;
    for (NodeId x : outer_nodes) {
      if (dual_[x] < by_dual) {
        by_dual = dual_[x];
        zero_node = x;
      }
    }
    NodeId tight_node = 0;
    Weight by_slack = kInfinity;
    for (NodeId y : frontier) {
      ++last_.nodes_touched;
      if (!inner[y] && slack[y] < by_slack) {
        by_slack = slack[y];
        tight_node = y;
      }
    }
    const Weight delta = std::min(by_dual, by_slack);
    for (NodeId x : outer_nodes) dual_[x] -= delta;
    for (NodeId y : inner_nodes) dual_[y] += delta;
    for (NodeId y : frontier) {
      if (!inner[y]) slack[y] -= delta;
    }

    if (by_dual <= by_slack) {
      // zero_node's dual hit zero: free it and shift the path toward root.
      if (zero_node != root) {
        const NodeId y = mate_[zero_node];
        unmatch(zero_node);
        flip_from(y);
      }
      return;
    }
    if (mate_[tight_node] == 0) {
      flip_from(tight_node);  // augmenting path
      return;
    }
    inner[tight_node] = 1;
    inner_nodes.push_back(tight_node);
    grow(mate_[tight_node]);
  }
}

void DynamicMatching::unit_step(EdgeId e, Weight sign) {
  const Edge& edge = graph_.edge(e);
  const NodeId l = edge.u;
  const NodeId r = edge.v;
  const bool matched = mate_[l] == r;
  graph_.apply_delta(e, sign);
  const Weight w = edge.w;
  if (matched) weight_ += sign;

  NodeId defects[2] = {0, 0};
  if (sign > 0) {
    if (matched) {
      ++dual_[l];
      return;
    }
    if (dual_[l] + dual_[r] >= w) return;
    // Violated by one. Raise a free endpoint if possible, otherwise free l.
    if (mate_[r] == 0 && mate_[l] != 0) {
      ++dual_[r];
      defects[0] = r;
    } else {
      ++dual_[l];
      const NodeId old = mate_[l];
      unmatch(l);
      defects[0] = l;
      defects[1] = old;
    }
  } else {
    if (!matched) return;
    // Matched edge lost tightness. Lower one endpoint's dual when that keeps
    // every incident edge feasible.
    for (NodeId x : {l, r}) {
      if (dual_[x] == 0) continue;
      bool feasible = true;
      for (EdgeId id : graph_.incident(x)) {
        ++last_.edges_scanned;
        const Edge& f = graph_.edge(id);
        if (dual_[x] - 1 + dual_[f.other(x)] < f.w) {
          feasible = false;
          break;
        }
      }
      if (feasible) {
        --dual_[x];
        return;
      }
    }
    unmatch(l);
    defects[0] = l;
    defects[1] = r;
  }
  for (NodeId d : defects) {
    if (d != 0 && is_defect(d)) repair(d);
  }
}

void DynamicMatching::apply(const WeightChange& change) {
  const EdgeId e = graph_.require_edge(change.u, change.v);
  const Weight next = graph_.weight(e) + change.delta;
  if (next < 1 || next > graph_.max_weight()) {
    throw RangeError("edge (" + std::to_string(change.u) + "," + std::to_string(change.v) +
                     ") weight " + std::to_string(next) + " outside [1," +
                     std::to_string(graph_.max_weight()) + "]");
  }
  last_ = {};
  last_searches_ = 0;
  const Weight sign = change.delta < 0 ? -1 : 1;
  const Weight steps = change.delta < 0 ? -change.delta : change.delta;
  for (Weight i = 0; i < steps; ++i) unit_step(e, sign);
  total_ += last_;
}

std::vector<std::pair<NodeId, NodeId>> DynamicMatching::query_matching() const {
  std::vector<std::pair<NodeId, NodeId>> out;
  for (NodeId l = 1; l <= sides_.left; ++l) {
    if (mate_[l] != 0) out.emplace_back(l, mate_[l]);
  }
  return out;
}

void DynamicMatching::check_certificate() const {
  Weight total = 0;
  for (NodeId v = 1; v <= graph_.node_count(); ++v) {
    if (dual_[v] < 0) throw InvariantError("negative dual at node " + std::to_string(v));
    const NodeId m = mate_[v];
    if (m == 0) {
      if (dual_[v] != 0) throw InvariantError("free node with positive dual");
      continue;
    }
    if (mate_[m] != v) throw InvariantError("mate pointers disagree");
    const Weight w = edge_weight(v, m);
    if (dual_[v] + dual_[m] != w) throw InvariantError("matched edge not tight");
    if (sides_.is_left(v)) total += w;
  }
  if (total != weight_) throw InvariantError("stored matching weight is stale");
  for (const Edge& e : graph_.edges()) {
    if (dual_[e.u] + dual_[e.v] < e.w) throw InvariantError("dual infeasible edge");
  }
}

bool is_valid_b_matching(const WeightedGraph& g,
                         std::span<const std::pair<NodeId, NodeId>> edges,
                         std::span<const std::int64_t> b) {
  if (b.size() != g.node_count() + 1) {
    throw ArgumentError("b-vector must have one entry per node (index 0 unused)");
  }
  for (NodeId v = 1; v <= g.node_count(); ++v) {
    if (b[v] < 0) throw ArgumentError("b_v must be nonnegative");
  }
  std::vector<std::int64_t> load(g.node_count() + 1, 0);
  for (auto [u, v] : edges) {
    g.require_edge(u, v);
    ++load[u];
    ++load[v];
  }
  for (NodeId v = 1; v <= g.node_count(); ++v) {
    if (load[v] > b[v]) return false;
  }
  return true;
}

}  // namespace wdg
