#pragma once

#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "wdg/dyn_sssp.hpp"
#include "wdg/graph.hpp"

namespace wdg {

// Minimum spanning tree kept current under weight changes by replacement-edge
// repair:
//   tree edge decreases, non-tree edge increases   -> no structural change
//   non-tree edge (a,b) decreases                  -> swap out the heaviest
//                                                     edge on the tree path a..b
//                                                     if strictly heavier
//   tree edge increases                            -> swap in the lightest edge
//                                                     crossing the cut if
//                                                     strictly lighter
// Each repair costs O(n) for path/cut traversal plus O(m) for the cut scan.
class DynamicMst {
 public:
  // Throws InfeasibleError for disconnected graphs, ArgumentError for
  // directed ones.
  explicit DynamicMst(WeightedGraph graph);

  void apply(const WeightChange& change);

  Weight query_weight() const noexcept { return weight_; }
  std::vector<EdgeId> tree_edges() const;
  bool in_tree(EdgeId e) const { return in_tree_.at(e); }
  const WeightedGraph& graph() const noexcept { return graph_; }

  const WorkCounters& last_work() const noexcept { return last_; }
  const WorkCounters& total_work() const noexcept { return total_; }
  // Number of weight changes handled so far.
  std::uint64_t changes_applied() const noexcept { return changes_applied_; }

  // Spanning, acyclic, weight bookkeeping, cycle optimality. O(n m).
  void check_invariants() const;

 private:
  void link(EdgeId e);
  void cut(EdgeId e);
  // Tree path from a to b as edge ids.
  std::vector<EdgeId> tree_path(NodeId a, NodeId b, WorkCounters& work) const;
  void on_nontree_decrease(EdgeId e);
  void on_tree_increase(EdgeId e);

  WeightedGraph graph_;
  std::vector<char> in_tree_;
  std::vector<std::vector<EdgeId>> tree_adj_;
  Weight weight_ = 0;
  WorkCounters last_;
  WorkCounters total_;
  std::uint64_t changes_applied_ = 0;
};

// Decides connectivity of a dynamic unweighted graph G on n nodes through
// MST weight queries on the complete graph K_n: an edge of K_n weighs 1 when
// present in G and 2 otherwise, and G is connected iff the MST weighs n - 1.
// Every edit of G is exactly one weight change on K_n.
class ConnectivityAdapter {
 public:
  static constexpr std::size_t kDefaultMaxNodes = 2000;

  // Starts with G empty. Throws ArgumentError when n is 0 or above max_nodes.
  explicit ConnectivityAdapter(std::size_t n, std::size_t max_nodes = kDefaultMaxNodes);

  // Throws StateError on double add / missing remove, ArgumentError on u == v
  // or a bad node.
  void add_edge(NodeId u, NodeId v);
  void remove_edge(NodeId u, NodeId v);
  bool has_edge(NodeId u, NodeId v) const;

  bool is_connected() const noexcept { return mst_.query_weight() == Weight(n_) - 1; }
  std::size_t node_count() const noexcept { return n_; }
  const DynamicMst& mst() const noexcept { return mst_; }
  const std::set<std::pair<NodeId, NodeId>>& edges() const noexcept { return shadow_; }

  // K_n weights are 1 exactly on the simulated edges. Throws InvariantError.
  void check_invariants() const;

 private:
  std::pair<NodeId, NodeId> normalize(NodeId u, NodeId v) const;

  std::size_t n_;
  DynamicMst mst_;
  std::set<std::pair<NodeId, NodeId>> shadow_;
};

}  // namespace wdg
