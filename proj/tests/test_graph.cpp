#include <doctest.h>

#include <random>

#include "support/brute.hpp"
#include "wdg/error.hpp"
#include "wdg/generate.hpp"
#include "wdg/graph.hpp"
#include "wdg/graph_io.hpp"
#include "wdg/oracles.hpp"

using namespace wdg;

TEST_CASE("undirected edges are stored canonically") {
  WeightedGraph g(Orientation::kUndirected, 3, 5);
  const EdgeId e = g.add_edge(3, 1, 4);
  CHECK(g.edge(e) == Edge{1, 3, 4});
  CHECK(g.find_edge(1, 3) == e);
  CHECK(g.find_edge(3, 1) == e);
  CHECK_FALSE(g.find_edge(1, 2));
  CHECK(g.degree(1) == 1);
  CHECK(g.degree(2) == 0);
}

TEST_CASE("directed edges keep orientation") {
  WeightedGraph g(Orientation::kDirected, 2, 5);
  const EdgeId a = g.add_edge(1, 2, 1);
  const EdgeId b = g.add_edge(2, 1, 2);
  CHECK(a != b);
  CHECK(g.find_edge(1, 2) == a);
  CHECK(g.find_edge(2, 1) == b);
  CHECK(g.incident(1).size() == 2);
}

TEST_CASE("add_edge rejects structural and range violations") {
  WeightedGraph g(Orientation::kUndirected, 3, 5);
  g.add_edge(1, 2, 1);
  CHECK_THROWS_AS(g.add_edge(1, 1, 1), StructuralError);
  CHECK_THROWS_AS(g.add_edge(2, 1, 3), StructuralError);
  CHECK_THROWS_AS(g.add_edge(0, 1, 3), StructuralError);
  CHECK_THROWS_AS(g.add_edge(1, 4, 3), StructuralError);
  CHECK_THROWS_AS(g.add_edge(1, 3, 0), RangeError);
  CHECK_THROWS_AS(g.add_edge(1, 3, 6), RangeError);

  auto b = WeightedGraph::bipartite(2, 2, 3);
  CHECK_THROWS_AS(b.add_edge(1, 2, 1), StructuralError);
  CHECK_THROWS_AS(b.add_edge(3, 4, 1), StructuralError);
  CHECK_NOTHROW(b.add_edge(4, 1, 1));
}

TEST_CASE("weight changes are atomic and range checked") {
  WeightedGraph g(Orientation::kUndirected, 2, 4);
  const EdgeId e = g.add_edge(1, 2, 2);
  CHECK(g.apply_change({2, 1, 2}) == 4);
  CHECK_THROWS_AS(g.apply_change({1, 2, 1}), RangeError);
  CHECK(g.weight(e) == 4);
  CHECK_THROWS_AS(g.apply_delta(e, -4), RangeError);
  CHECK(g.weight(e) == 4);
  CHECK_THROWS_AS(g.apply_change({1, 3, 1}), StructuralError);
  CHECK(WeightChange{1, 2, 3}.inverse() == WeightChange{1, 2, -3});
}

TEST_CASE("graph text round trip") {
  const std::string text =
      "# triangle\n"
      "p undirected 3 3 9\n"
      "e 1 2 1\n"
      "\n"
      "e 2 3 2\n"
      "e 1 3 9\n";
  const auto g = parse_graph(text);
  CHECK(g.node_count() == 3);
  CHECK(g.edge_count() == 3);
  CHECK(g.max_weight() == 9);
  CHECK(parse_graph(serialize_graph(g)) == g);

  const auto b = parse_graph("p bipartite 2 3 2 4\ne 1 3 4\ne 2 5 1\n");
  REQUIRE(b.bipartition());
  CHECK(b.bipartition()->left == 2);
  CHECK(b.bipartition()->right == 3);
  CHECK(parse_graph(serialize_graph(b)) == b);

  const auto d = parse_graph("p directed 2 2 3\ne 1 2 3\ne 2 1 1\n");
  CHECK(d.directed());
  CHECK(parse_graph(serialize_graph(d)) == d);
}

TEST_CASE("graph parse errors carry line numbers") {
  auto line_of = [](const std::string& text) -> std::size_t {
    try {
      parse_graph(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(line_of("p undirected 3 1 5\ne 1 1 3\n") == 2);
  CHECK(line_of("p undirected 3 2 5\ne 1 2 3\ne 2 1 3\n") == 3);
  CHECK(line_of("p undirected 3 1 5\ne 1 2 7\n") == 2);
  CHECK(line_of("q undirected 3 1 5\n") == 1);
  CHECK(line_of("p undirected 3 1 5\ne 1 x 2\n") == 2);
  CHECK(line_of("p undirected 3 2 5\ne 1 2 2\n") != 0);
  CHECK(line_of("p bipartite 2 2 1 5\ne 1 2 1\n") == 2);
}

TEST_CASE("trace parse, resolve and validate") {
  const auto g = parse_graph("p undirected 3 2 5\ne 1 2 3\ne 2 3 1\n");
  const auto trace = parse_trace("t 2\nc 1 2 +2\nq dist\nc 2 3 =3\nc 1 2 -1\n", g);
  REQUIRE(trace.events.size() == 4);
  CHECK(trace.bound == 2);
  CHECK(trace.change_count() == 3);
  CHECK(std::get<WeightChange>(trace.events[2]) == WeightChange{2, 3, 2});
  CHECK(std::get<Query>(trace.events[1]).kind == QueryKind::kDist);
  CHECK(parse_trace(serialize_trace(trace), g) == trace);

  CHECK_THROWS_AS(parse_trace("t 2\nc 1 2 =3\n"), ParseError);
  CHECK_THROWS_AS(parse_trace("t 1\nc 1 2 +2\n", g), ParseError);
  CHECK_THROWS_AS(parse_trace("t 2\nc 1 3 +1\n", g), ValidationError);
  CHECK_THROWS_AS(parse_trace("t 2\nc 1 2 +2\nc 1 2 +1\n", g), ValidationError);
  CHECK_THROWS_AS(parse_trace("t 2\nq nope\n", g), ParseError);

  const auto u = parse_trace("t unbounded\nc 1 2 +2\n", g);
  CHECK_FALSE(u.bound);
}

TEST_CASE("adapter edits are validated against the initial edge set") {
  const auto g = parse_graph("p undirected 3 1 2\ne 1 2 1\n");
  CHECK_NOTHROW(parse_trace("t unbounded\nr 1 2\na 1 2\na 2 3\nq conn\n", g));
  CHECK_THROWS_AS(parse_trace("t unbounded\na 1 2\n", g), ValidationError);
  CHECK_THROWS_AS(parse_trace("t unbounded\nr 2 3\n", g), ValidationError);
}

TEST_CASE("generators are deterministic and respect their parameters") {
  RandomGraphOptions opt{30, 0.2, 7, 42, true, Orientation::kUndirected};
  const auto a = random_graph(opt);
  const auto b = random_graph(opt);
  CHECK(a == b);
  CHECK(serialize_graph(a) == serialize_graph(b));
  CHECK(oracles::connectivity(a));
  for (const Edge& e : a.edges()) {
    CHECK(e.w >= 1);
    CHECK(e.w <= 7);
  }
  opt.seed = 43;
  CHECK_FALSE(random_graph(opt) == a);

  CHECK_THROWS_AS(random_graph({10, 0.0, 3, 1, false, Orientation::kUndirected}), ArgumentError);
  CHECK_THROWS_AS(random_graph({10, 0.05, 3, 1, true, Orientation::kUndirected}), ArgumentError);

  const auto bi = random_bipartite_graph(4, 5, 0.5, 3, 9);
  REQUIRE(bi.bipartition());
  for (const Edge& e : bi.edges()) {
    CHECK(bi.bipartition()->is_left(e.u));
    CHECK(bi.bipartition()->is_right(e.v));
  }
}

TEST_CASE("random traces stay within bound and range") {
  std::mt19937_64 rng(5);
  for (int round = 0; round < 20; ++round) {
    const auto g = brute::graph(rng, 8, 0.5, 4, true);
    const Weight bound = 1 + round % 3;
    const auto trace = random_trace(g, {200, bound, static_cast<std::uint64_t>(round),
                                        QueryKind::kMst, 7});
    CHECK(trace.change_count() == 200);
    CHECK(trace.bound == bound);
    CHECK_NOTHROW(validate_trace(g, trace));
    for (const auto& ev : trace.events) {
      if (const auto* c = std::get_if<WeightChange>(&ev)) {
        CHECK(c->delta != 0);
        CHECK(std::abs(c->delta) <= bound);
      }
    }
    CHECK(serialize_trace(trace) == serialize_trace(random_trace(
                                        g, {200, bound, static_cast<std::uint64_t>(round),
                                            QueryKind::kMst, 7})));
  }
  WeightedGraph flat(Orientation::kUndirected, 2, 1);
  flat.add_edge(1, 2, 1);
  CHECK_THROWS_AS(random_trace(flat, 5, 1, 1), ArgumentError);
}

TEST_CASE("adapter traces replay cleanly") {
  const auto g = random_graph(8, 0.3, 2, 11);
  const auto trace = random_adapter_trace(g, 100, 3);
  CHECK_NOTHROW(validate_trace(g, trace));
  std::size_t edits = 0, queries = 0;
  for (const auto& ev : trace.events) {
    edits += std::holds_alternative<AdapterEdit>(ev);
    queries += std::holds_alternative<Query>(ev);
  }
  CHECK(edits == 100);
  CHECK(queries == 100);
}
