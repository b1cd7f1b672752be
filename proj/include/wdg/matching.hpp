#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "wdg/dyn_sssp.hpp"
#include "wdg/graph.hpp"

namespace wdg {

// Maximum-weight matching of a bipartite graph, kept current under weight
// changes through a primal-dual certificate.
//
// Duals y >= 0 satisfy y(l) + y(r) >= w(l,r) on every edge, with equality on
// matched edges and y = 0 on unmatched nodes. Those conditions certify
// optimality. A unit change breaks them at no more than two free nodes with
// positive dual ("defects"); each defect is cleared by one Hungarian search
// that grows an alternating tree from it and either augments, or shifts
// duals until a tree node's dual reaches zero and flips the alternating path.
class DynamicMatching {
 public:
  // Bipartition taken from the graph. Throws StructuralError if the graph
  // is directed or has no bipartition.
  explicit DynamicMatching(WeightedGraph graph);

  // Unit steps; a RangeError leaves everything untouched.
  void apply(const WeightChange& change);

  Weight query_weight() const noexcept { return weight_; }
  // Matched edges as (left, right) pairs, ordered by left node.
  std::vector<std::pair<NodeId, NodeId>> query_matching() const;
  NodeId mate(NodeId v) const { return mate_.at(v); }  // 0 when free
  const std::vector<Weight>& duals() const noexcept { return dual_; }

  const WeightedGraph& graph() const noexcept { return graph_; }
  const WorkCounters& last_work() const noexcept { return last_; }
  const WorkCounters& total_work() const noexcept { return total_; }
  std::uint64_t last_searches() const noexcept { return last_searches_; }

  // Matching disjointness, stored weight, dual feasibility and complementary
  // slackness. Throws InvariantError. Never consults a brute-force solver.
  void check_certificate() const;

 private:
  Weight edge_weight(NodeId a, NodeId b) const;
  void unmatch(NodeId a);
  void match(NodeId a, NodeId b);
  void unit_step(EdgeId e, Weight sign);
  void repair(NodeId defect);
  bool is_defect(NodeId v) const { return mate_[v] == 0 && dual_[v] > 0; }

  WeightedGraph graph_;
  Bipartition sides_;
  std::vector<NodeId> mate_;
  std::vector<Weight> dual_;
  Weight weight_ = 0;

  WorkCounters last_;
  WorkCounters total_;
  std::uint64_t last_searches_ = 0;
};

// Validity of an edge multiset against per-node capacities b (indexed by node
// id, b[0] ignored): every node is incident to at most b[v] chosen edges.
// Throws StructuralError for an edge not in g, ArgumentError for b[v] < 0.
bool is_valid_b_matching(const WeightedGraph& g,
                         std::span<const std::pair<NodeId, NodeId>> edges,
                         std::span<const std::int64_t> b);

}  // namespace wdg
