#pragma once

#include <span>
#include <vector>

#include "wdg/graph.hpp"

// Weighted semi-matchings on a bipartite graph: left nodes are tasks, right
// nodes are machines. A machine runs its tasks one after another and the
// cost is the sum of finishing times under the best order.
namespace wdg::semi {

// assignment[i] is the machine of task i+1; every task must be assigned to a
// neighboring machine.
struct SemiMatching {
  std::vector<NodeId> assignment;
  friend bool operator==(const SemiMatching&, const SemiMatching&) = default;
};

// Minimum over processing orders of the sum of prefix sums. Ascending order
// is optimal, giving sum_j (d - j + 1) * w_(j).
Weight ordered_cost(std::span<const Weight> processing_times);
// Same quantity by trying all d! orders. Guarded to d <= 10.
Weight ordered_cost_bruteforce(std::span<const Weight> processing_times);

// Throws ValidationError when sm is not a semi-matching of g.
void validate(const WeightedGraph& g, const SemiMatching& sm);
// r must be a machine node. Assumes sm valid.
Weight machine_cost(const WeightedGraph& g, const SemiMatching& sm, NodeId machine);
Weight total_cost(const WeightedGraph& g, const SemiMatching& sm);

struct OptimalSemiMatching {
  SemiMatching matching;
  Weight cost = 0;
  // slot[i]: position of task i+1 counted from the end of its machine's
  // queue (1 = runs last), as chosen by the assignment solver.
  std::vector<std::size_t> slot;
};

// Minimum-cost semi-matching through a min-cost assignment of tasks to
// machine slots, where slot k of machine r costs k * w(task, r). Throws
// InfeasibleError for an isolated task and StructuralError for a graph
// without bipartition.
OptimalSemiMatching optimal_semi_matching(const WeightedGraph& g);

// Exhaustive over assignments, with ordered_cost_bruteforce per machine.
// Guard: at most 8 tasks, each of degree at most 5 (SizeGuardError).
Weight bruteforce_semi_matching(const WeightedGraph& g);

}  // namespace wdg::semi
