#include "wdg/semi_matching.hpp"

#include <algorithm>
#include <functional>
#include <limits>

#include "wdg/error.hpp"
#include "wdg/oracles.hpp"

namespace wdg::semi {
namespace {

const Bipartition& sides_of(const WeightedGraph& g) {
  if (!g.bipartition() || g.directed()) {
    throw StructuralError("semi-matching needs an undirected bipartite graph");
  }
  return *g.bipartition();
}

}  // namespace

Weight ordered_cost(std::span<const Weight> processing_times) {
  std::vector<Weight> sorted(processing_times.begin(), processing_times.end());
  std::sort(sorted.begin(), sorted.end());
  const auto d = static_cast<Weight>(sorted.size());
  Weight cost = 0;
  for (Weight j = 0; j < d; ++j) cost += (d - j) * sorted[static_cast<std::size_t>(j)];
  return cost;
}

Weight ordered_cost_bruteforce(std::span<const Weight> processing_times) {
  if (processing_times.size() > 10) throw SizeGuardError("order brute force needs d <= 10");
  std::vector<Weight> order(processing_times.begin(), processing_times.end());
  std::sort(order.begin(), order.end());
  Weight best = std::numeric_limits<Weight>::max();
  do {
    Weight finish = 0;
    Weight sum = 0;
    for (Weight w : order) {
      finish += w;
      sum += finish;
    }
    best = std::min(best, sum);
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

void validate(const WeightedGraph& g, const SemiMatching& sm) {
  const Bipartition& sides = sides_of(g);
  if (sm.assignment.size() != sides.left) {
    throw ValidationError("semi-matching must assign all " + std::to_string(sides.left) +
                          " tasks");
  }
  for (std::size_t i = 0; i < sm.assignment.size(); ++i) {
    if (!g.find_edge(i + 1, sm.assignment[i])) {
      throw ValidationError("task " + std::to_string(i + 1) + " assigned to non-neighbor " +
                            std::to_string(sm.assignment[i]));
    }
  }
}

Weight machine_cost(const WeightedGraph& g, const SemiMatching& sm, NodeId machine) {
  const Bipartition& sides = sides_of(g);
  if (!sides.is_right(machine)) {
    throw ArgumentError("node " + std::to_string(machine) + " is not a machine");
  }
  std::vector<Weight> times;
  for (std::size_t i = 0; i < sm.assignment.size(); ++i) {
    if (sm.assignment[i] == machine) {
      times.push_back(g.weight(g.require_edge(i + 1, machine)));
    }
  }
  return ordered_cost(times);
}

Weight total_cost(const WeightedGraph& g, const SemiMatching& sm) {
  validate(g, sm);
  const Bipartition& sides = *g.bipartition();
  Weight total = 0;
  for (NodeId r = sides.left + 1; r <= sides.left + sides.right; ++r) {
    total += machine_cost(g, sm, r);
  }
  return total;
}

OptimalSemiMatching optimal_semi_matching(const WeightedGraph& g) {
  const Bipartition& sides = sides_of(g);
  const std::size_t tasks = sides.left;
  for (NodeId l = 1; l <= tasks; ++l) {
    if (g.degree(l) == 0) {
      throw InfeasibleError("task " + std::to_string(l) + " has no machine");
    }
  }
  OptimalSemiMatching result;
  if (tasks == 0) return result;

  // A machine never runs more tasks than it has neighbors.
  struct Slot {
    NodeId machine;
    std::size_t rank;
  };
  std::vector<Slot> slots;
  for (NodeId r = tasks + 1; r <= tasks + sides.right; ++r) {
    for (std::size_t k = 1; k <= g.degree(r); ++k) slots.push_back({r, k});
  }
  const Weight forbidden =
      static_cast<Weight>(tasks) * static_cast<Weight>(tasks) * g.max_weight() + 1;
  std::vector<Weight> cost(tasks * slots.size(), forbidden);
  for (NodeId l = 1; l <= tasks; ++l) {
    for (std::size_t j = 0; j < slots.size(); ++j) {
      if (auto e = g.find_edge(l, slots[j].machine)) {
        cost[(l - 1) * slots.size() + j] = static_cast<Weight>(slots[j].rank) * g.weight(*e);
      }
    }
  }
  const auto column = oracles::min_cost_assignment(cost, tasks, slots.size());
  result.matching.assignment.resize(tasks);
  result.slot.resize(tasks);
  Weight total = 0;
  for (std::size_t i = 0; i < tasks; ++i) {
    total += cost[i * slots.size() + column[i]];
    result.matching.assignment[i] = slots[column[i]].machine;
    result.slot[i] = slots[column[i]].rank;
  }
  if (total >= forbidden) throw InvariantError("assignment solver used a forbidden slot");
  result.cost = total;
  return result;
}

Weight bruteforce_semi_matching(const WeightedGraph& g) {
  const Bipartition& sides = sides_of(g);
  const std::size_t tasks = sides.left;
  if (tasks > 8) throw SizeGuardError("semi-matching brute force needs at most 8 tasks");
  std::vector<std::vector<NodeId>> options(tasks);
  for (NodeId l = 1; l <= tasks; ++l) {
    if (g.degree(l) == 0) throw InfeasibleError("task " + std::to_string(l) + " is isolated");
    if (g.degree(l) > 5) throw SizeGuardError("semi-matching brute force needs degree <= 5");
    for (EdgeId id : g.incident(l)) options[l - 1].push_back(g.edge(id).other(l));
  }

  SemiMatching sm;
  sm.assignment.assign(tasks, 0);
  Weight best = std::numeric_limits<Weight>::max();
  std::function<void(std::size_t)> recurse = [&](std::size_t i) {
    if (i == tasks) {
      Weight total = 0;
      for (NodeId r = tasks + 1; r <= tasks + sides.right; ++r) {
        std::vector<Weight> times;
        for (std::size_t k = 0; k < tasks; ++k) {
          if (sm.assignment[k] == r) times.push_back(g.weight(g.require_edge(k + 1, r)));
        }
        total += ordered_cost_bruteforce(times);
      }
      best = std::min(best, total);
      return;
    }
    for (NodeId r : options[i]) {
      sm.assignment[i] = r;
      recurse(i + 1);
    }
  };
  recurse(0);
  return tasks == 0 ? 0 : best;
}

}  // namespace wdg::semi
