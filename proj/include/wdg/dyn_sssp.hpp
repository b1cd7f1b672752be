#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "wdg/graph.hpp"

namespace wdg {

// Instrumentation shared by the dynamic structures.
struct WorkCounters {
  std::uint64_t nodes_touched = 0;
  std::uint64_t edges_scanned = 0;

  std::uint64_t total() const noexcept { return nodes_touched + edges_scanned; }

  WorkCounters& operator+=(const WorkCounters& o) noexcept {
    nodes_touched += o.nodes_touched;
    edges_scanned += o.edges_scanned;
    return *this;
  }
};

// Exact single-source shortest paths from s on an undirected graph, kept
// current under weight changes by affected-region repair.
//
// A decrease that creates a shortcut runs a Dijkstra-style relaxation
// confined to the nodes that improve. An increase on a tree edge first
// determines, in distance order, which nodes of the subtree below it lose
// every tight path; only those are reset and re-settled from their valid
// neighbors. Distance queries are O(1).
class DynamicSssp {
 public:
  // Throws ArgumentError for directed graphs, StructuralError for bad nodes.
  DynamicSssp(WeightedGraph graph, NodeId source, NodeId target);

  // Applies the change to the owned graph and repairs the tree. A RangeError
  // from the graph leaves both graph and state untouched.
  void apply(const WeightChange& change);

  Weight query_dist() const noexcept { return dist_[target_]; }
  Weight distance_to(NodeId v) const { return dist_.at(v); }
  const std::vector<Weight>& distances() const noexcept { return dist_; }

  // Node sequence s..t of weight query_dist(). Throws InfeasibleError when t
  // is unreachable.
  std::vector<NodeId> query_path() const;

  // Tree parent edge of v, empty for s and unreachable nodes.
  std::optional<EdgeId> parent_edge(NodeId v) const;

  NodeId source() const noexcept { return source_; }
  NodeId target() const noexcept { return target_; }
  const WeightedGraph& graph() const noexcept { return graph_; }

  const WorkCounters& last_work() const noexcept { return last_; }
  const WorkCounters& total_work() const noexcept { return total_; }

  // Checks dist(s) = 0, the relaxed triangle inequality on every edge, and
  // parent consistency. Throws InvariantError.
  void check_invariants() const;

 private:
  static constexpr EdgeId kNoEdge = static_cast<EdgeId>(-1);

  void initialize();
  void on_decrease(EdgeId e);
  void on_increase(EdgeId e);
  void settle(std::vector<NodeId> seeds, const std::vector<char>* region);

  WeightedGraph graph_;
  NodeId source_;
  NodeId target_;
  std::vector<Weight> dist_;
  std::vector<EdgeId> parent_;
  std::vector<char> affected_;  // scratch, all zero between updates
  WorkCounters last_;
  WorkCounters total_;
};

}  // namespace wdg
