#include "wdg/generate.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "wdg/error.hpp"

namespace wdg {
namespace {

using Rng = std::mt19937_64;

Weight uniform(Rng& rng, Weight lo, Weight hi) {
  return std::uniform_int_distribution<Weight>(lo, hi)(rng);
}

bool coin(Rng& rng, double p) { return std::uniform_real_distribution<double>(0, 1)(rng) < p; }

void check_density(double density) {
  if (!(density > 0.0 && density <= 1.0)) throw ArgumentError("density must be in (0, 1]");
}

}  // namespace

WeightedGraph random_graph(const RandomGraphOptions& o) {
  check_density(o.density);
  if (o.max_weight < 1) throw ArgumentError("W must be at least 1");
  const std::size_t n = o.nodes;
  if (o.connected) {
    if (n == 0) throw ArgumentError("a connected graph needs at least one node");
    const double pairs = 0.5 * static_cast<double>(n) * static_cast<double>(n - 1);
    if (n > 1 && o.density * pairs < static_cast<double>(n - 1)) {
      throw ArgumentError("density too low for a connected graph");
    }
  }

  Rng rng(o.seed);
  WeightedGraph g(o.orientation, n, o.max_weight);
  const bool directed = o.orientation == Orientation::kDirected;

  if (o.connected && n > 1) {
    std::vector<NodeId> order(n);
    std::iota(order.begin(), order.end(), NodeId{1});
    std::shuffle(order.begin(), order.end(), rng);
    for (std::size_t i = 1; i < n; ++i) {
      const NodeId parent = order[static_cast<std::size_t>(uniform(rng, 0, Weight(i) - 1))];
      g.add_edge(parent, order[i], uniform(rng, 1, o.max_weight));
    }
  }

  for (NodeId u = 1; u <= n; ++u) {
    for (NodeId v = directed ? 1 : u + 1; v <= n; ++v) {
      if (u == v) continue;
      const bool take = coin(rng, o.density);
      const Weight w = uniform(rng, 1, o.max_weight);
      if (take && !g.find_edge(u, v)) g.add_edge(u, v, w);
    }
  }
  return g;
}

WeightedGraph random_graph(std::size_t nodes, double density, Weight max_weight,
                           std::uint64_t seed) {
  RandomGraphOptions o;
  o.nodes = nodes;
  o.density = density;
  o.max_weight = max_weight;
  o.seed = seed;
  return random_graph(o);
}

WeightedGraph random_bipartite_graph(std::size_t left, std::size_t right, double density,
                                     Weight max_weight, std::uint64_t seed) {
  check_density(density);
  Rng rng(seed);
  WeightedGraph g = WeightedGraph::bipartite(left, right, max_weight);
  for (NodeId l = 1; l <= left; ++l) {
    for (NodeId r = left + 1; r <= left + right; ++r) {
      const bool take = coin(rng, density);
      const Weight w = uniform(rng, 1, max_weight);
      if (take) g.add_edge(l, r, w);
    }
  }
  return g;
}

ChangeTrace random_trace(const WeightedGraph& g, const RandomTraceOptions& o) {
  if (o.bound < 1) throw ArgumentError("change bound must be at least 1");
  if (o.query && o.query_every == 0) throw ArgumentError("query_every must be positive");
  ChangeTrace trace;
  trace.bound = o.bound;
  if (o.changes == 0) return trace;
  if (g.edge_count() == 0 || g.max_weight() < 2) {
    throw ArgumentError("graph admits no weight change (needs m > 0 and W > 1)");
  }

  Rng rng(o.seed);
  std::vector<Weight> weights;
  for (const Edge& e : g.edges()) weights.push_back(e.w);
  const Weight top = g.max_weight();

  for (std::size_t i = 0; i < o.changes; ++i) {
    const auto e = static_cast<EdgeId>(uniform(rng, 0, Weight(g.edge_count()) - 1));
    const Weight lo = std::max(-o.bound, 1 - weights[e]);
    const Weight hi = std::min(o.bound, top - weights[e]);
    // [lo, hi] always contains 0 and at least one nonzero value since W > 1.
    Weight delta = uniform(rng, lo, hi - 1);
    if (delta >= 0) ++delta;
    weights[e] += delta;
    const Edge& edge = g.edge(e);
    trace.events.emplace_back(WeightChange{edge.u, edge.v, delta});
    if (o.query && (i + 1) % o.query_every == 0) trace.events.emplace_back(Query{*o.query});
  }
  return trace;
}

ChangeTrace random_trace(const WeightedGraph& g, std::size_t changes, Weight bound,
                         std::uint64_t seed) {
  RandomTraceOptions o;
  o.changes = changes;
  o.bound = bound;
  o.seed = seed;
  return random_trace(g, o);
}

ChangeTrace random_adapter_trace(const WeightedGraph& g, std::size_t edits,
                                 std::uint64_t seed) {
  const std::size_t n = g.node_count();
  if (edits > 0 && n < 2) throw ArgumentError("adapter stream needs at least two nodes");
  Rng rng(seed);
  std::set<std::pair<NodeId, NodeId>> present;
  for (const Edge& e : g.edges()) present.emplace(std::min(e.u, e.v), std::max(e.u, e.v));

  ChangeTrace trace;
  trace.bound = 1;
  for (std::size_t i = 0; i < edits; ++i) {
    NodeId u = static_cast<NodeId>(uniform(rng, 1, Weight(n)));
    NodeId v = static_cast<NodeId>(uniform(rng, 1, Weight(n) - 1));
    if (v >= u) ++v;
    auto key = std::make_pair(std::min(u, v), std::max(u, v));
    const bool add = present.count(key) == 0;
    if (add) {
      present.insert(key);
    } else {
      present.erase(key);
    }
    trace.events.emplace_back(AdapterEdit{add, key.first, key.second});
    trace.events.emplace_back(Query{QueryKind::kConn});
  }
  return trace;
}

}  // namespace wdg
