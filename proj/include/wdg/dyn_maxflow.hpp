#pragma once

#include <cstdint>
#include <vector>

#include "wdg/dyn_sssp.hpp"
#include "wdg/graph.hpp"

namespace wdg {

// Maximum (s,t)-flow kept current under additive capacity changes, one unit
// at a time.
//
// Unit decrease on a saturated edge carrying flow u->v: if the flow-support
// graph has a v->u path the unit is cancelled around that cycle; otherwise
// one unit is withdrawn along s->u, the edge, and v->t, and a single residual
// search tries to route it back. Unit increase: a single residual search for
// an augmenting path. Each unit costs at most three graph searches.
//
// Undirected edges hold a signed flow relative to the stored orientation
// (u < v), so residual capacity is w - f forward and w + f backward.
class DynamicMaxflow {
 public:
  // Initial maximum flow by shortest augmenting paths. Throws ArgumentError
  // when s == t.
  DynamicMaxflow(WeightedGraph graph, NodeId source, NodeId sink);

  // Applies the change to the owned graph, unit by unit. A RangeError leaves
  // graph and flow untouched.
  void apply(const WeightChange& change);

  Weight query_value() const noexcept { return value_; }
  const std::vector<Weight>& flow() const noexcept { return flow_; }
  const WeightedGraph& graph() const noexcept { return graph_; }
  NodeId source() const noexcept { return source_; }
  NodeId sink() const noexcept { return sink_; }

  // Work of the last apply() and the largest single-unit step so far.
  const WorkCounters& last_work() const noexcept { return last_; }
  const WorkCounters& total_work() const noexcept { return total_; }
  std::uint64_t max_unit_scans() const noexcept { return max_unit_scans_; }
  std::uint64_t last_searches() const noexcept { return last_searches_; }

  // Capacity, conservation, value bookkeeping, and maximality (no residual
  // s->t path). Throws InvariantError.
  void check_invariants() const;

 private:
  // Flow pushed along edge e when traversed from x, positive or negative.
  Weight along(EdgeId e, NodeId x) const;
  Weight residual(EdgeId e, NodeId x) const;
  void push(EdgeId e, NodeId x, Weight amount);

  // BFS from `from`. With support=true follows edges carrying positive flow
  // in the traversal direction; otherwise follows residual capacity.
  // Stops when `to` is reached. Returns false when unreachable.
  bool search(NodeId from, NodeId to, bool support);
  // Edges of the last successful search, as (edge, tail) pairs from `from`.
  void trace_path(NodeId from, NodeId to, std::vector<std::pair<EdgeId, NodeId>>& out) const;

  bool augment_one();
  void decrease_unit(EdgeId e);
  void increase_unit(EdgeId e);

  WeightedGraph graph_;
  NodeId source_;
  NodeId sink_;
  std::vector<Weight> flow_;
  Weight value_ = 0;

  std::vector<EdgeId> via_;  // BFS predecessor edge per node
  std::vector<std::uint32_t> seen_;
  std::uint32_t epoch_ = 0;
  std::vector<NodeId> queue_;

  WorkCounters last_;
  WorkCounters total_;
  std::uint64_t unit_scans_ = 0;
  std::uint64_t max_unit_scans_ = 0;
  std::uint64_t last_searches_ = 0;
};

}  // namespace wdg
