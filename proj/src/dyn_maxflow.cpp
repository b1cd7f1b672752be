#include "wdg/dyn_maxflow.hpp"

#include <algorithm>
#include <queue>
#include <utility>

#include "wdg/error.hpp"
#include "wdg/oracles.hpp"

namespace wdg {

DynamicMaxflow::DynamicMaxflow(WeightedGraph graph, NodeId source, NodeId sink)
    : graph_(std::move(graph)), source_(source), sink_(sink) {
  graph_.require_node(source_);
  graph_.require_node(sink_);
  if (source_ == sink_) throw ArgumentError("max flow needs s != t");
  const std::size_t n = graph_.node_count();
  flow_.assign(graph_.edge_count(), 0);
  via_.assign(n + 1, 0);
  seen_.assign(n + 1, 0);
  queue_.reserve(n);

  std::vector<std::pair<EdgeId, NodeId>> path;
  while (search(source_, sink_, false)) {
    trace_path(source_, sink_, path);
    Weight bottleneck = kInfinity;
    for (auto [e, tail] : path) bottleneck = std::min(bottleneck, residual(e, tail));
    for (auto [e, tail] : path) push(e, tail, bottleneck);
    value_ += bottleneck;
  }
  last_ = {};
  total_ = {};
}

Weight DynamicMaxflow::along(EdgeId e, NodeId x) const {
  return graph_.edge(e).u == x ? flow_[e] : -flow_[e];
}

Weight DynamicMaxflow::residual(EdgeId e, NodeId x) const {
  const Edge& edge = graph_.edge(e);
  if (edge.u == x) return edge.w - flow_[e];
  return graph_.directed() ? flow_[e] : edge.w + flow_[e];
}

void DynamicMaxflow::push(EdgeId e, NodeId x, Weight amount) {
  flow_[e] += graph_.edge(e).u == x ? amount : -amount;
}

bool DynamicMaxflow::search(NodeId from, NodeId to, bool support) {
  ++last_searches_;
  if (++epoch_ == 0) {
    std::fill(seen_.begin(), seen_.end(), 0);
    epoch_ = 1;
  }
  queue_.clear();
  seen_[from] = epoch_;
  queue_.push_back(from);
  for (std::size_t head = 0; head < queue_.size(); ++head) {
    const NodeId x = queue_[head];
    ++last_.nodes_touched;
    if (x == to) return true;
    for (EdgeId e : graph_.incident(x)) {
      ++last_.edges_scanned;
      ++unit_scans_;
      const NodeId y = graph_.edge(e).other(x);
      if (seen_[y] == epoch_) continue;
      const bool open = support ? along(e, x) > 0 : residual(e, x) > 0;
      if (!open) continue;
      seen_[y] = epoch_;
      via_[y] = e;
      if (y == to) return true;
      queue_.push_back(y);
    }
  }
  return seen_[to] == epoch_;
}

void DynamicMaxflow::trace_path(NodeId from, NodeId to,
                                std::vector<std::pair<EdgeId, NodeId>>& out) const {
  out.clear();
  for (NodeId x = to; x != from;) {
    const EdgeId e = via_[x];
    const NodeId tail = graph_.edge(e).other(x);
    out.emplace_back(e, tail);
    x = tail;
  }
  std::reverse(out.begin(), out.end());
}

bool DynamicMaxflow::augment_one() {
  if (!search(source_, sink_, false)) return false;
  std::vector<std::pair<EdgeId, NodeId>> path;
  trace_path(source_, sink_, path);
  for (auto [e, tail] : path) push(e, tail, 1);
  ++value_;
  return true;
}

void DynamicMaxflow::decrease_unit(EdgeId e) {
  const Edge& edge = graph_.edge(e);
  const Weight f = flow_[e];
  if (f != edge.w && f != -edge.w) {
    graph_.apply_delta(e, -1);  // not saturated: nothing to reroute
    return;
  }
  // Orient along the flow: one unit leaves `head` over e into `tail_end`.
  const NodeId head = f > 0 ? edge.u : edge.v;
  const NodeId tail_end = edge.other(head);

  std::vector<std::pair<EdgeId, NodeId>> path;
  if (search(tail_end, head, true)) {
    // The unit circulates: cancel it around the cycle, value unchanged.
    trace_path(tail_end, head, path);
    for (auto [id, tail] : path) push(id, tail, -1);
    push(e, head, -1);
    graph_.apply_delta(e, -1);
    return;
  }
  // No cycle through e, so by flow decomposition the unit on e lies on an
  // s-t path: s->head and tail_end->t exist and are node-disjoint.
  if (seen_[sink_] != epoch_) {
    throw InvariantError("flow support has no path from edge head to sink");
  }
  trace_path(tail_end, sink_, path);
  std::vector<std::pair<EdgeId, NodeId>> prefix;
  if (!search(source_, head, true)) {
    throw InvariantError("flow support has no path from source to edge tail");
  }
  trace_path(source_, head, prefix);
  for (auto [id, tail] : prefix) push(id, tail, -1);
  push(e, head, -1);
  for (auto [id, tail] : path) push(id, tail, -1);
  --value_;
  graph_.apply_delta(e, -1);
  augment_one();
}

void DynamicMaxflow::increase_unit(EdgeId e) {
  graph_.apply_delta(e, +1);
  augment_one();
}

void DynamicMaxflow::apply(const WeightChange& change) {
  const EdgeId e = graph_.require_edge(change.u, change.v);
  const Weight next = graph_.weight(e) + change.delta;
  if (next < 1 || next > graph_.max_weight()) {
    throw RangeError("edge (" + std::to_string(change.u) + "," + std::to_string(change.v) +
                     ") weight " + std::to_string(next) + " outside [1," +
                     std::to_string(graph_.max_weight()) + "]");
  }
  last_ = {};
  last_searches_ = 0;
  const Weight steps = change.delta < 0 ? -change.delta : change.delta;
  for (Weight i = 0; i < steps; ++i) {
    unit_scans_ = 0;
    if (change.delta < 0) {
      decrease_unit(e);
    } else {
      increase_unit(e);
    }
    max_unit_scans_ = std::max(max_unit_scans_, unit_scans_);
  }
  total_ += last_;
}

void DynamicMaxflow::check_invariants() const {
  const Weight value = oracles::evaluate_flow(graph_, source_, sink_, flow_);
  if (value != value_) {
    throw InvariantError("stored value " + std::to_string(value_) + " != net outflow " +
                         std::to_string(value));
  }
  std::vector<char> reached(graph_.node_count() + 1, 0);
  std::queue<NodeId> q;
  reached[source_] = 1;
  q.push(source_);
  while (!q.empty()) {
    const NodeId x = q.front();
    q.pop();
    for (EdgeId e : graph_.incident(x)) {
      const NodeId y = graph_.edge(e).other(x);
      if (!reached[y] && residual(e, x) > 0) {
        reached[y] = 1;
        q.push(y);
      }
    }
  }
  if (reached[sink_]) throw InvariantError("augmenting path exists; flow not maximum");
}

}  // namespace wdg
