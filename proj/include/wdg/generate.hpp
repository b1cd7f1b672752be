#pragma once

#include <cstdint>
#include <optional>

#include "wdg/graph.hpp"

namespace wdg {

struct RandomGraphOptions {
  std::size_t nodes = 0;
  double density = 1.0;  // probability of each candidate edge, in (0, 1]
  Weight max_weight = 1;
  std::uint64_t seed = 0;
  bool connected = false;  // plant a random spanning tree first
  Orientation orientation = Orientation::kUndirected;
};

// Deterministic for a fixed seed. Throws ArgumentError on infeasible
// parameters, including a density too low to expect n-1 edges when a
// connected graph is requested.
WeightedGraph random_graph(const RandomGraphOptions& options);
WeightedGraph random_graph(std::size_t nodes, double density, Weight max_weight,
                           std::uint64_t seed);

WeightedGraph random_bipartite_graph(std::size_t left, std::size_t right, double density,
                                     Weight max_weight, std::uint64_t seed);

struct RandomTraceOptions {
  std::size_t changes = 0;  // number of weight-change events
  Weight bound = 1;         // |delta| <= bound, bound >= 1
  std::uint64_t seed = 0;
  std::optional<QueryKind> query;  // emit a query after every query_every changes
  std::size_t query_every = 1;
};

// Every delta is nonzero, within the bound, and keeps the replayed weight in
// [1, W]. Throws ArgumentError when no edge admits a change (m = 0 or W = 1).
ChangeTrace random_trace(const WeightedGraph& g, const RandomTraceOptions& options);
ChangeTrace random_trace(const WeightedGraph& g, std::size_t changes, Weight bound,
                         std::uint64_t seed);

// Random add/remove stream over the unweighted graph whose initial edge set is
// the edge set of g, with a "q conn" after every edit.
ChangeTrace random_adapter_trace(const WeightedGraph& g, std::size_t edits,
                                 std::uint64_t seed);

}  // namespace wdg
