#include "wdg/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <utility>

#include "wdg/error.hpp"

namespace wdg {

WeightedGraph::WeightedGraph(Orientation orientation, std::size_t node_count,
                             Weight max_weight)
    : orientation_(orientation),
      node_count_(node_count),
      max_weight_(max_weight),
      incident_(node_count + 1) {
  if (max_weight < 1) throw ArgumentError("weight bound W must be at least 1");
}

WeightedGraph WeightedGraph::bipartite(std::size_t left, std::size_t right,
                                       Weight max_weight) {
  WeightedGraph g(Orientation::kUndirected, left + right, max_weight);
  g.bipartition_ = Bipartition{left, right};
  return g;
}

std::uint64_t WeightedGraph::key(NodeId u, NodeId v) const noexcept {
  if (!directed() && u > v) std::swap(u, v);
  return static_cast<std::uint64_t>(u) * (node_count_ + 1) + v;
}

void WeightedGraph::require_node(NodeId v) const {
  if (!has_node(v)) {
    throw StructuralError("node " + std::to_string(v) + " outside 1.." +
                          std::to_string(node_count_));
  }
}

EdgeId WeightedGraph::add_edge(NodeId u, NodeId v, Weight w) {
  require_node(u);
  require_node(v);
  if (u == v) throw StructuralError("self-loop at node " + std::to_string(u));
  if (bipartition_ && !((bipartition_->is_left(u) && bipartition_->is_right(v)) ||
                        (bipartition_->is_left(v) && bipartition_->is_right(u)))) {
    throw StructuralError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                          ") does not cross the bipartition");
  }
  if (w < 1 || w > max_weight_) {
    throw RangeError("weight " + std::to_string(w) + " outside [1," +
                     std::to_string(max_weight_) + "]");
  }
  if (!directed() && u > v) std::swap(u, v);
  const EdgeId id = edges_.size();
  if (!lookup_.emplace(key(u, v), id).second) {
    throw StructuralError("duplicate edge (" + std::to_string(u) + "," +
                          std::to_string(v) + ")");
  }
  edges_.push_back({u, v, w});
  incident_[u].push_back(id);
  incident_[v].push_back(id);
  return id;
}

std::span<const EdgeId> WeightedGraph::incident(NodeId v) const {
  require_node(v);
  return incident_[v];
}

std::optional<EdgeId> WeightedGraph::find_edge(NodeId u, NodeId v) const {
  if (!has_node(u) || !has_node(v)) return std::nullopt;
  auto it = lookup_.find(key(u, v));
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

EdgeId WeightedGraph::require_edge(NodeId u, NodeId v) const {
  auto e = find_edge(u, v);
  if (!e) {
    throw StructuralError("no edge (" + std::to_string(u) + "," + std::to_string(v) +
                          ")");
  }
  return *e;
}

Weight WeightedGraph::apply_change(const WeightChange& change) {
  return apply_delta(require_edge(change.u, change.v), change.delta);
}

Weight WeightedGraph::apply_delta(EdgeId e, Weight delta) {
  Edge& edge = edges_.at(e);
  const Weight next = edge.w + delta;
  if (next < 1 || next > max_weight_) {
    throw RangeError("edge (" + std::to_string(edge.u) + "," + std::to_string(edge.v) +
                     ") weight " + std::to_string(edge.w) + " + " +
                     std::to_string(delta) + " leaves [1," +
                     std::to_string(max_weight_) + "]");
  }
  edge.w = next;
  return next;
}

Weight WeightedGraph::total_weight() const noexcept {
  return std::accumulate(edges_.begin(), edges_.end(), Weight{0},
                         [](Weight acc, const Edge& e) { return acc + e.w; });
}

std::string to_string(QueryKind kind) {
  switch (kind) {
    case QueryKind::kDist: return "dist";
    case QueryKind::kFlow: return "flow";
    case QueryKind::kMwm: return "mwm";
    case QueryKind::kMst: return "mst";
    case QueryKind::kConn: return "conn";
  }
  return "?";
}

std::optional<QueryKind> query_kind_from_string(std::string_view text) {
  if (text == "dist") return QueryKind::kDist;
  if (text == "flow") return QueryKind::kFlow;
  if (text == "mwm") return QueryKind::kMwm;
  if (text == "mst") return QueryKind::kMst;
  if (text == "conn") return QueryKind::kConn;
  return std::nullopt;
}

std::size_t ChangeTrace::change_count() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(events.begin(), events.end(), [](const TraceEvent& ev) {
        return std::holds_alternative<WeightChange>(ev);
      }));
}

void validate_trace(const WeightedGraph& g, const ChangeTrace& trace) {
  std::vector<Weight> weights;
  weights.reserve(g.edge_count());
  for (const Edge& e : g.edges()) weights.push_back(e.w);

  std::set<std::pair<NodeId, NodeId>> shadow;
  for (const Edge& e : g.edges()) shadow.emplace(std::min(e.u, e.v), std::max(e.u, e.v));

  auto fail = [](std::size_t index, const std::string& what) {
    throw ValidationError("event " + std::to_string(index) + ": " + what);
  };

  for (std::size_t i = 0; i < trace.events.size(); ++i) {
    const TraceEvent& ev = trace.events[i];
    if (const auto* ch = std::get_if<WeightChange>(&ev)) {
      if (trace.bound && (ch->delta > *trace.bound || -ch->delta > *trace.bound)) {
        fail(i, "delta " + std::to_string(ch->delta) + " exceeds bound " +
                    std::to_string(*trace.bound));
      }
      auto e = g.find_edge(ch->u, ch->v);
      if (!e) {
        fail(i, "no edge (" + std::to_string(ch->u) + "," + std::to_string(ch->v) + ")");
      }
      const Weight next = weights[*e] + ch->delta;
      if (next < 1 || next > g.max_weight()) {
        fail(i, "weight " + std::to_string(next) + " outside [1," +
                    std::to_string(g.max_weight()) + "]");
      }
      weights[*e] = next;
    } else if (const auto* ed = std::get_if<AdapterEdit>(&ev)) {
      if (!g.has_node(ed->u) || !g.has_node(ed->v) || ed->u == ed->v) {
        fail(i, "bad adapter edge (" + std::to_string(ed->u) + "," +
                    std::to_string(ed->v) + ")");
      }
      auto key = std::make_pair(std::min(ed->u, ed->v), std::max(ed->u, ed->v));
      if (ed->add) {
        if (!shadow.insert(key).second) fail(i, "edge added twice");
      } else if (shadow.erase(key) == 0) {
        fail(i, "removing an absent edge");
      }
    }
  }
}

}  // namespace wdg
