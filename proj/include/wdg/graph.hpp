#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

namespace wdg {

// Nodes are numbered 1..n. Index 0 is never a valid node.
using NodeId = std::size_t;
using EdgeId = std::size_t;
using Weight = std::int64_t;

inline constexpr Weight kInfinity = std::numeric_limits<Weight>::max();

enum class Orientation { kUndirected, kDirected };

// Left side is 1..left, right side is left+1..left+right.
struct Bipartition {
  std::size_t left = 0;
  std::size_t right = 0;

  bool is_left(NodeId v) const noexcept { return v >= 1 && v <= left; }
  bool is_right(NodeId v) const noexcept { return v > left && v <= left + right; }

  friend bool operator==(const Bipartition&, const Bipartition&) = default;
};

struct Edge {
  NodeId u = 0;
  NodeId v = 0;
  Weight w = 0;

  NodeId other(NodeId x) const noexcept { return x == u ? v : u; }

  friend bool operator==(const Edge&, const Edge&) = default;
};

// A signed additive change to the weight of edge (u, v).
struct WeightChange {
  NodeId u = 0;
  NodeId v = 0;
  Weight delta = 0;

  WeightChange inverse() const noexcept { return {u, v, -delta}; }

  friend bool operator==(const WeightChange&, const WeightChange&) = default;
};

// Fixed-topology graph with mutable integer weights in [1, W].
//
// Undirected edges are stored once with u < v. Directed edges keep their
// orientation, and (u, v) and (v, u) may coexist. Topology is set at
// construction time through add_edge(); afterwards only weights change.
class WeightedGraph {
 public:
  WeightedGraph() = default;
  WeightedGraph(Orientation orientation, std::size_t node_count, Weight max_weight);

  // Undirected graph on left + right nodes whose edges must cross the sides.
  static WeightedGraph bipartite(std::size_t left, std::size_t right, Weight max_weight);

  // Throws StructuralError (bad node, self-loop, duplicate, crosses no
  // bipartition) or RangeError (w outside [1, W]).
  EdgeId add_edge(NodeId u, NodeId v, Weight w);

  bool directed() const noexcept { return orientation_ == Orientation::kDirected; }
  Orientation orientation() const noexcept { return orientation_; }
  std::size_t node_count() const noexcept { return node_count_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  Weight max_weight() const noexcept { return max_weight_; }
  const std::optional<Bipartition>& bipartition() const noexcept { return bipartition_; }

  const Edge& edge(EdgeId e) const { return edges_.at(e); }
  std::span<const Edge> edges() const noexcept { return edges_; }
  Weight weight(EdgeId e) const { return edges_.at(e).w; }

  // All edges touching v, in insertion order. For directed graphs this
  // includes both outgoing and incoming edges.
  std::span<const EdgeId> incident(NodeId v) const;
  std::size_t degree(NodeId v) const { return incident(v).size(); }

  std::optional<EdgeId> find_edge(NodeId u, NodeId v) const;
  // Like find_edge, but throws StructuralError when absent.
  EdgeId require_edge(NodeId u, NodeId v) const;

  bool has_node(NodeId v) const noexcept { return v >= 1 && v <= node_count_; }
  void require_node(NodeId v) const;

  // Adds delta to edge (u, v) and returns the new weight. Unknown edge
  // throws StructuralError; leaving [1, W] throws RangeError and leaves the
  // graph untouched.
  Weight apply_change(const WeightChange& change);
  Weight apply_delta(EdgeId e, Weight delta);

  Weight total_weight() const noexcept;

  friend bool operator==(const WeightedGraph& a, const WeightedGraph& b) {
    return a.orientation_ == b.orientation_ && a.node_count_ == b.node_count_ &&
           a.max_weight_ == b.max_weight_ && a.bipartition_ == b.bipartition_ &&
           a.edges_ == b.edges_;
  }

 private:
  std::uint64_t key(NodeId u, NodeId v) const noexcept;

  Orientation orientation_ = Orientation::kUndirected;
  std::size_t node_count_ = 0;
  Weight max_weight_ = 1;
  std::optional<Bipartition> bipartition_;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> incident_;
  std::unordered_map<std::uint64_t, EdgeId> lookup_;
};

enum class QueryKind { kDist, kFlow, kMwm, kMst, kConn };

std::string to_string(QueryKind kind);
std::optional<QueryKind> query_kind_from_string(std::string_view text);

struct Query {
  QueryKind kind = QueryKind::kDist;
  friend bool operator==(const Query&, const Query&) = default;
};

// Add or remove an edge of the unweighted graph simulated by the
// connectivity adapter.
struct AdapterEdit {
  bool add = true;
  NodeId u = 0;
  NodeId v = 0;
  friend bool operator==(const AdapterEdit&, const AdapterEdit&) = default;
};

using TraceEvent = std::variant<WeightChange, Query, AdapterEdit>;

// Ordered stream of weight changes and queries. An empty bound means the
// trace declares itself unbounded.
struct ChangeTrace {
  std::optional<Weight> bound;
  std::vector<TraceEvent> events;

  std::size_t change_count() const noexcept;

  friend bool operator==(const ChangeTrace&, const ChangeTrace&) = default;
};

// Checks every change against the declared bound, the edge set of g, and the
// [1, W] range under replay. AdapterEdit events are checked for double add /
// missing remove against the edge set of g taken as the initial simulated
// graph. Throws ValidationError naming the offending event index.
void validate_trace(const WeightedGraph& g, const ChangeTrace& trace);

}  // namespace wdg
