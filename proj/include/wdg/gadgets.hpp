#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wdg/dyn_sssp.hpp"
#include "wdg/graph.hpp"

namespace wdg {

using BitVector = std::vector<std::uint8_t>;
using BitMatrix = std::vector<BitVector>;

struct OuMvRound {
  BitVector u;
  BitVector v;
  friend bool operator==(const OuMvRound&, const OuMvRound&) = default;
};

// Online Boolean vector-matrix-vector products against a fixed n x n matrix.
struct OuMvInstance {
  std::size_t n = 0;
  BitMatrix matrix;
  std::vector<OuMvRound> rounds;

  // Throws ArgumentError on a shape mismatch or a non-bit entry.
  void validate() const;

  friend bool operator==(const OuMvInstance&, const OuMvInstance&) = default;
};

// u^T M v over the Boolean semiring.
bool direct_product(const BitMatrix& m, const BitVector& u, const BitVector& v);
std::vector<bool> direct_outputs(const OuMvInstance& instance);

// Text format:
//   omv <n> <rounds>
//   n rows of n bits
//   per round: a line of n bits for u, then one for v
// Bits may be written contiguously ("0110") or space separated.
OuMvInstance parse_oumv(std::string_view text);
std::string serialize_oumv(const OuMvInstance& instance);

// Every bit of M, u and v is 1 with probability `density`.
OuMvInstance random_oumv(std::size_t n, std::size_t rounds, double density,
                         std::uint64_t seed);

// Full bipartite graph with sides A + {t} and B + {s}:
//   w(a_i, b_j) = 3 - 2 M[i][j],  w(s, a_i) = 3 - 2 u[i],  w(t, b_j) = 3 - 2 v[j]
// The (s,t) distance is 3 when u^T M v = 1 and at least 5 otherwise.
// Node ids: a_i = i, t = n+1, b_j = n+1+j, s = 2n+2 (i, j 1-based).
class SpGadget {
 public:
  static constexpr Weight kMaxWeight = 3;

  // Starts with u = v = 0. Throws ArgumentError for an empty or non-square M.
  explicit SpGadget(const BitMatrix& m);

  // Moves the gadget to round vectors (u, v) and returns the star edge
  // changes that did it, each with delta -2 or +2. Throws ArgumentError on a
  // length mismatch.
  std::vector<WeightChange> set_round_vectors(const BitVector& u, const BitVector& v);

  std::size_t n() const noexcept { return n_; }
  NodeId a(std::size_t i) const noexcept { return i; }
  NodeId b(std::size_t j) const noexcept { return n_ + 1 + j; }
  NodeId s() const noexcept { return 2 * n_ + 2; }
  NodeId t() const noexcept { return n_ + 1; }
  const WeightedGraph& graph() const noexcept { return graph_; }
  const BitVector& u() const noexcept { return u_; }
  const BitVector& v() const noexcept { return v_; }

 private:
  std::size_t n_;
  WeightedGraph graph_;
  BitVector u_;
  BitVector v_;
};

// Claim 1 decision rule: distance below 5 means the product is 1.
inline bool sp_gadget_decision(Weight distance) noexcept { return distance < 5; }

struct OuMvRun {
  std::vector<bool> outputs;
  std::vector<Weight> distances;
  std::vector<std::size_t> changes_per_round;
  std::size_t total_changes = 0;
  std::size_t queries = 0;
  WorkCounters work;
};

// Builds the gadget for u = v = 0 once, then per round feeds the star
// changes to a DynamicSssp and issues a single distance query.
OuMvRun solve_oumv_via_sssp(const OuMvInstance& instance);

// Both transforms take a subgraph of K_{N,N} given as (l, r) pairs with l in
// 1..N and r in N+1..2N (either order accepted) and return K_{N,N} with W=2.
// Pairs outside the bipartition throw StructuralError.
//
// Weight 2 on subgraph edges, 1 elsewhere: MWM = N + MCM(subgraph).
WeightedGraph matching_shift_transform(std::size_t n,
                                       std::span<const std::pair<NodeId, NodeId>> subgraph);
// Weight 1 on subgraph edges, 2 elsewhere: optimal semi-matching cost is
// 2N - MCM(subgraph).
WeightedGraph semimatching_shift_transform(std::size_t n,
                                           std::span<const std::pair<NodeId, NodeId>> subgraph);

// Random subgraph of K_{N,N}, each pair kept with probability density.
std::vector<std::pair<NodeId, NodeId>> random_bipartite_subgraph(std::size_t n, double density,
                                                                 std::uint64_t seed);

struct GadgetCheck {
  std::string name;
  bool passed = false;
  std::size_t instances = 0;
  std::string detail;  // first counterexample when failed
};

// Self-check of the gadget identities against the static oracles: Claim 1
// on all n=2 instances and `samples` random ones at n=4 and n=8, the OuMv
// reduction round trip, and both shift identities for N = 2..5.
std::vector<GadgetCheck> verify_gadgets(std::uint64_t seed, std::size_t samples);

}  // namespace wdg
