#include <doctest.h>

#include <algorithm>
#include <random>

#include "support/brute.hpp"
#include "wdg/error.hpp"
#include "wdg/gadgets.hpp"
#include "wdg/matching.hpp"
#include "wdg/oracles.hpp"
#include "wdg/semi_matching.hpp"

using namespace wdg;

namespace {

BitVector bits(std::uint64_t mask, std::size_t n, std::size_t offset) {
  BitVector out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = (mask >> (offset + i)) & 1U;
  return out;
}

}  // namespace

TEST_CASE("n = 1 gadget weights and distance") {
  SpGadget g(BitMatrix{{1}});
  const auto& graph = g.graph();
  CHECK(graph.node_count() == 4);
  CHECK(graph.edge_count() == 3);
  CHECK(graph.weight(graph.require_edge(g.a(1), g.b(1))) == 1);
  CHECK(graph.weight(graph.require_edge(g.s(), g.a(1))) == 3);
  CHECK(graph.weight(graph.require_edge(g.t(), g.b(1))) == 3);
  CHECK(brute::shortest_path(graph, g.s(), g.t()) == 7);
  CHECK(oracles::dijkstra_dist(graph, g.s(), g.t()) == 7);
}

TEST_CASE("matrix bits map to A x B weights") {
  SpGadget g(BitMatrix{{0, 1}, {0, 0}});
  const auto& graph = g.graph();
  CHECK(graph.edge_count() == 8);
  for (std::size_t i = 1; i <= 2; ++i) {
    for (std::size_t j = 1; j <= 2; ++j) {
      const Weight want = (i == 1 && j == 2) ? 1 : 3;
      CHECK(graph.weight(graph.require_edge(g.a(i), g.b(j))) == want);
    }
  }
  for (const Edge& e : graph.edges()) CHECK((e.w == 1 || e.w == 3));
}

TEST_CASE("round vectors emit only star changes of size 2") {
  SpGadget g(BitMatrix{{0, 1}, {0, 0}});
  const auto first = g.set_round_vectors({1, 0}, {0, 1});
  CHECK(first == std::vector<WeightChange>{{g.a(1), g.s(), -2}, {g.t(), g.b(2), -2}});
  CHECK(g.set_round_vectors({1, 0}, {0, 1}).empty());
  const auto third = g.set_round_vectors({1, 0}, {1, 1});
  CHECK(third == std::vector<WeightChange>{{g.t(), g.b(1), -2}});
  const auto back = g.set_round_vectors({0, 0}, {0, 0});
  CHECK(back.size() == 3);
  for (const auto& c : back) CHECK(c.delta == 2);
  CHECK_THROWS_AS(g.set_round_vectors({1}, {0, 0}), ArgumentError);
  CHECK_THROWS_AS(SpGadget(BitMatrix{}), ArgumentError);
  CHECK_THROWS_AS(SpGadget(BitMatrix{{1, 0}}), ArgumentError);
}

TEST_CASE("all-ones instance has distance 3") {
  const std::size_t n = 4;
  SpGadget g(BitMatrix(n, BitVector(n, 1)));
  g.set_round_vectors(BitVector(n, 1), BitVector(n, 1));
  CHECK(oracles::dijkstra_dist(g.graph(), g.s(), g.t()) == 3);
}

TEST_CASE("decision rule") {
  CHECK(sp_gadget_decision(3));
  CHECK_FALSE(sp_gadget_decision(5));
  CHECK_FALSE(sp_gadget_decision(7));
}

TEST_CASE("claim 1 holds on every n = 2 instance") {
  for (std::uint64_t mask = 0; mask < 256; ++mask) {
    const BitMatrix m{bits(mask, 2, 0), bits(mask, 2, 2)};
    const BitVector u = bits(mask, 2, 4), v = bits(mask, 2, 6);
    SpGadget g(m);
    g.set_round_vectors(u, v);
    const Weight d = brute::shortest_path(g.graph(), g.s(), g.t());
    if (direct_product(m, u, v)) {
      CHECK(d == 3);
    } else {
      CHECK(d >= 5);
    }
  }
}

TEST_CASE("oumv text round trip and errors") {
  const auto inst = random_oumv(5, 4, 0.4, 7);
  CHECK(parse_oumv(serialize_oumv(inst)) == inst);
  CHECK(serialize_oumv(random_oumv(5, 4, 0.4, 7)) == serialize_oumv(inst));
  const auto spaced = parse_oumv("omv 2 1\n0 1\n0 0\n# round 0\n1 0\n0 1\n");
  CHECK(spaced.matrix == BitMatrix{{0, 1}, {0, 0}});
  CHECK_THROWS_AS(parse_oumv("omv 2 1\n01\n00\n10\n"), ParseError);
  CHECK_THROWS_AS(parse_oumv("omv 2 0\n012\n00\n"), ParseError);
  CHECK_THROWS_AS(parse_oumv("omv 0 0\n"), ParseError);
  CHECK_THROWS_AS(parse_oumv("omx 1 0\n1\n"), ParseError);
}

TEST_CASE("reduction outputs") {
  OuMvInstance inst{2, {{0, 1}, {0, 0}}, {{{1, 0}, {0, 1}}}};
  auto run = solve_oumv_via_sssp(inst);
  CHECK(run.outputs == std::vector<bool>{true});
  CHECK(run.queries == 1);

  OuMvInstance zero{3, BitMatrix(3, BitVector(3, 0)), {}};
  for (int r = 0; r < 5; ++r) zero.rounds.push_back({BitVector(3, r % 2), BitVector(3, 1)});
  run = solve_oumv_via_sssp(zero);
  CHECK(run.outputs == std::vector<bool>(5, false));

  std::mt19937_64 rng(61);
  for (int k = 0; k < 40; ++k) {
    const std::size_t n = 1 + rng() % 12;
    const auto random = random_oumv(n, 2 * n, 0.05 + 0.1 * (k % 5), rng());
    const auto result = solve_oumv_via_sssp(random);
    REQUIRE(result.outputs == direct_outputs(random));
    REQUIRE(result.queries == random.rounds.size());
    for (auto c : result.changes_per_round) REQUIRE(c <= 2 * n);
    for (std::size_t r = 0; r < random.rounds.size(); ++r) {
      if (result.outputs[r]) {
        REQUIRE(result.distances[r] == 3);
      } else {
        REQUIRE(result.distances[r] >= 5);
      }
    }
  }
}

TEST_CASE("matching shift transform") {
  const std::vector<std::pair<NodeId, NodeId>> empty;
  CHECK(oracles::bruteforce_mwm(matching_shift_transform(3, empty)) == 3);
  const std::vector<std::pair<NodeId, NodeId>> perfect{{1, 4}, {5, 2}, {3, 6}};
  const auto h = matching_shift_transform(3, perfect);
  CHECK(h.edge_count() == 9);
  CHECK(h.weight(h.require_edge(2, 5)) == 2);
  CHECK(h.weight(h.require_edge(1, 5)) == 1);
  CHECK(oracles::bruteforce_mwm(h) == 6);
  const std::vector<std::pair<NodeId, NodeId>> bad{{1, 2}};
  CHECK_THROWS_AS(matching_shift_transform(3, bad), StructuralError);

  std::mt19937_64 rng(62);
  for (std::size_t n = 2; n <= 5; ++n) {
    for (int k = 0; k < 40; ++k) {
      const auto sub = random_bipartite_subgraph(n, 0.1 + 0.1 * (k % 7), rng());
      const auto mcm = static_cast<Weight>(brute::max_cardinality_matching(2 * n, sub));
      const auto g = matching_shift_transform(n, sub);
      REQUIRE(oracles::bruteforce_mwm(g) - static_cast<Weight>(n) == mcm);
      REQUIRE(oracles::assignment_mwm(g) == oracles::bruteforce_mwm(g));
    }
  }
}

TEST_CASE("semi-matching shift transform") {
  const std::vector<std::pair<NodeId, NodeId>> empty;
  CHECK(semi::optimal_semi_matching(semimatching_shift_transform(3, empty)).cost == 6);
  const std::vector<std::pair<NodeId, NodeId>> perfect{{1, 4}, {2, 5}, {3, 6}};
  CHECK(semi::optimal_semi_matching(semimatching_shift_transform(3, perfect)).cost == 3);
  const std::vector<std::pair<NodeId, NodeId>> bad{{4, 5}};
  CHECK_THROWS_AS(semimatching_shift_transform(3, bad), StructuralError);

  std::mt19937_64 rng(63);
  for (std::size_t n = 2; n <= 4; ++n) {
    for (int k = 0; k < 25; ++k) {
      const auto sub = random_bipartite_subgraph(n, 0.1 + 0.1 * (k % 7), rng());
      const auto mcm = static_cast<Weight>(brute::max_cardinality_matching(2 * n, sub));
      const auto h = semimatching_shift_transform(n, sub);
      REQUIRE(2 * static_cast<Weight>(n) - brute::semi_matching(h) == mcm);
      REQUIRE(semi::optimal_semi_matching(h).cost == brute::semi_matching(h));
    }
  }
}

TEST_CASE("gadget self-check passes") {
  for (const auto& check : verify_gadgets(3, 100)) {
    INFO(check.name << ": " << check.detail);
    CHECK(check.passed);
    CHECK(check.instances > 0);
  }
}

TEST_CASE("growing subgraphs tracked by dynamic matching") {
  // Edges join the subgraph over rounds; each join is a 1 -> 2 weight change
  // on K_{N,N}, and the maintained weight must stay N + MCM.
  std::mt19937_64 rng(64);
  for (std::size_t n = 2; n <= 5; ++n) {
    for (int trial = 0; trial < 10; ++trial) {
      auto pairs = random_bipartite_subgraph(n, 1.0, 0);
      std::shuffle(pairs.begin(), pairs.end(), rng);
      std::vector<std::pair<NodeId, NodeId>> sub;
      DynamicMatching dm(matching_shift_transform(n, sub));
      REQUIRE(dm.query_weight() == static_cast<Weight>(n));
      for (const auto& p : pairs) {
        sub.push_back(p);
        dm.apply({p.first, p.second, +1});
        const auto mcm = static_cast<Weight>(brute::max_cardinality_matching(2 * n, sub));
        REQUIRE(dm.query_weight() == static_cast<Weight>(n) + mcm);
        dm.check_certificate();
      }
    }
  }
}
