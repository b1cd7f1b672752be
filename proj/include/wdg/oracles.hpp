#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "wdg/graph.hpp"

// From-scratch solvers. They serve as recomputation baselines for the bench
// harness and as correctness oracles for the dynamic structures. All are pure
// functions of their inputs.
namespace wdg::oracles {

struct PathResult {
  Weight distance = kInfinity;
  std::vector<NodeId> path;  // s..t, empty when unreachable
};

// Dijkstra with a binary heap. Ties broken by smallest node id, so the
// witness path is deterministic.
PathResult dijkstra(const WeightedGraph& g, NodeId s, NodeId t);
Weight dijkstra_dist(const WeightedGraph& g, NodeId s, NodeId t);
// Distances from s to every node (index 0 unused).
std::vector<Weight> dijkstra_all(const WeightedGraph& g, NodeId s);

// Sums the weights along a node sequence; throws StructuralError on a
// missing hop.
Weight path_weight(const WeightedGraph& g, std::span<const NodeId> path);

struct FlowResult {
  Weight value = 0;
  // Per-edge flow. Directed edges carry 0..w along u->v. Undirected edges
  // carry a signed amount: positive means u->v with u < v.
  std::vector<Weight> flow;
};

// Blocking-flow (Dinic) baseline. Throws ArgumentError when s == t.
FlowResult static_maxflow(const WeightedGraph& g, NodeId s, NodeId t);

// Returns the value of a per-edge flow after checking capacity and
// conservation; throws InvariantError on the first violation.
Weight evaluate_flow(const WeightedGraph& g, NodeId s, NodeId t,
                     std::span<const Weight> flow);

struct MstResult {
  Weight weight = 0;
  std::vector<EdgeId> edges;
};

// Kruskal. Ties broken by input edge index. Throws InfeasibleError when g is
// disconnected.
MstResult kruskal_mst(const WeightedGraph& g);

// Union-find over the edge set, weights ignored.
bool connectivity(const WeightedGraph& g);
bool connectivity(std::size_t node_count, std::span<const std::pair<NodeId, NodeId>> edges);

// Exhaustive branch-and-bound over matchings. The size guard rejects
// instances whose matching count bound exceeds 2^24 (SizeGuardError).
Weight bruteforce_mwm(const WeightedGraph& g);
std::size_t bruteforce_mcm(const WeightedGraph& g);
// Same search restricted to an explicit edge list on nodes 1..node_count.
std::size_t bruteforce_mcm(std::size_t node_count,
                           std::span<const std::pair<NodeId, NodeId>> edges);

// Maximum weight over edge subsets with deg(v) <= b[v]. b is indexed by node
// id (b[0] ignored). Needs m <= 24.
Weight bruteforce_b_matching(const WeightedGraph& g, std::span<const std::int64_t> b);

// Min-cost assignment of every row to a distinct column, rows <= cols, with
// row-major costs. Hungarian method with potentials, O(rows^2 cols). Returns
// the column of each row.
std::vector<std::size_t> min_cost_assignment(std::span<const Weight> cost, std::size_t rows,
                                             std::size_t cols);

// Maximum-weight matching of an undirected bipartite graph through the
// assignment solver; missing pairs cost nothing. Throws StructuralError
// without a bipartition.
Weight assignment_mwm(const WeightedGraph& g);

// Upper bound on the number of matchings, as used by the size guard.
double matching_count_bound(const WeightedGraph& g);

}  // namespace wdg::oracles
