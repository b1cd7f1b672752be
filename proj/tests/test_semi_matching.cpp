#include <doctest.h>

#include <random>

#include "support/brute.hpp"
#include "wdg/error.hpp"
#include "wdg/semi_matching.hpp"

using namespace wdg;

TEST_CASE("ordered cost closed form") {
  CHECK(semi::ordered_cost(std::vector<Weight>{2, 1}) == 4);
  CHECK(brute::order_cost({1, 2}) == 4);
  CHECK(semi::ordered_cost(std::vector<Weight>{}) == 0);
  for (Weight d = 1; d <= 8; ++d) {
    CHECK(semi::ordered_cost(std::vector<Weight>(d, 1)) == d * (d + 1) / 2);
  }
  std::mt19937_64 rng(41);
  for (int i = 0; i < 300; ++i) {
    std::vector<Weight> times(rng() % 7);
    for (auto& t : times) t = 1 + rng() % 9;
    const Weight want = brute::order_cost(times);
    CHECK(semi::ordered_cost(times) == want);
    CHECK(semi::ordered_cost_bruteforce(times) == want);
  }
  CHECK_THROWS_AS(semi::ordered_cost_bruteforce(std::vector<Weight>(11, 1)), SizeGuardError);
}

TEST_CASE("machine and total cost") {
  // K_{2,1}: tasks 1, 2 on machine 3 with weights 2 and 3.
  auto g = WeightedGraph::bipartite(2, 1, 9);
  g.add_edge(1, 3, 2);
  g.add_edge(2, 3, 3);
  const semi::SemiMatching sm{{3, 3}};
  CHECK(semi::machine_cost(g, sm, 3) == 7);
  CHECK(semi::total_cost(g, sm) == 7);
  CHECK_THROWS_AS(semi::machine_cost(g, sm, 1), ArgumentError);
  CHECK_THROWS_AS(semi::total_cost(g, semi::SemiMatching{{3}}), ValidationError);
  CHECK_THROWS_AS(semi::total_cost(g, semi::SemiMatching{{3, 2}}), ValidationError);
}

TEST_CASE("one task per machine costs the sum of weights") {
  auto g = WeightedGraph::bipartite(3, 3, 9);
  g.add_edge(1, 4, 5);
  g.add_edge(2, 5, 2);
  g.add_edge(3, 6, 7);
  g.add_edge(1, 5, 1);
  CHECK(semi::total_cost(g, semi::SemiMatching{{4, 5, 6}}) == 14);
}

TEST_CASE("optimal semi-matching agrees with brute force") {
  std::mt19937_64 rng(42);
  int checked = 0;
  for (int i = 0; i < 300 && checked < 150; ++i) {
    const std::size_t left = 1 + rng() % 6, right = 1 + rng() % 4;
    const auto g = brute::bipartite(rng, left, right, 0.6, 1 + rng() % 6);
    bool isolated = false;
    for (NodeId l = 1; l <= left; ++l) isolated = isolated || g.degree(l) == 0;
    if (isolated) {
      CHECK_THROWS_AS(semi::optimal_semi_matching(g), InfeasibleError);
      continue;
    }
    ++checked;
    const auto opt = semi::optimal_semi_matching(g);
    const Weight want = brute::semi_matching(g);
    CHECK(opt.cost == want);
    CHECK(semi::total_cost(g, opt.matching) == want);
    CHECK(semi::bruteforce_semi_matching(g) == want);
  }
  CHECK(checked > 50);
}

TEST_CASE("structural errors") {
  WeightedGraph g(Orientation::kUndirected, 2, 3);
  g.add_edge(1, 2, 1);
  CHECK_THROWS_AS(semi::optimal_semi_matching(g), StructuralError);
  auto big = WeightedGraph::bipartite(9, 1, 2);
  for (NodeId l = 1; l <= 9; ++l) big.add_edge(l, 10, 1);
  CHECK_THROWS_AS(semi::bruteforce_semi_matching(big), SizeGuardError);
  CHECK(semi::optimal_semi_matching(big).cost == 45);
}
