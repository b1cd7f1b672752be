#include "wdg/replay.hpp"

#include <chrono>
#include <functional>
#include <memory>
#include <set>
#include <utility>

#include "wdg/dyn_maxflow.hpp"
#include "wdg/dyn_mst.hpp"
#include "wdg/dyn_sssp.hpp"
#include "wdg/error.hpp"
#include "wdg/matching.hpp"
#include "wdg/oracles.hpp"

namespace wdg {
namespace {

using Clock = std::chrono::steady_clock;

std::int64_t elapsed_ns(Clock::time_point since) {
  return std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - since).count();
}

// Dynamic structure plus an independently maintained copy of the instance
// for from-scratch recomputation.
class Engine {
 public:
  virtual ~Engine() = default;
  virtual void apply(const TraceEvent& event) = 0;
  virtual void apply_static_only(const TraceEvent& event) = 0;
  virtual Weight dynamic_value() const = 0;
  virtual Weight static_value() const = 0;
  virtual std::uint64_t last_work() const = 0;
};

template <class Dynamic>
class WeightEngine : public Engine {
 public:
  template <class Static, class... Args>
  WeightEngine(const WeightedGraph& g, Static solve, Args... args)
      : dynamic_(g, args...), replica_(g), solve_(std::move(solve)) {}

  void apply(const TraceEvent& event) override {
    const auto& change = std::get<WeightChange>(event);
    dynamic_.apply(change);
    replica_.apply_change(change);
  }
  void apply_static_only(const TraceEvent& event) override {
    replica_.apply_change(std::get<WeightChange>(event));
  }
  Weight static_value() const override { return solve_(replica_); }
  std::uint64_t last_work() const override { return dynamic_.last_work().total(); }

 protected:
  Dynamic dynamic_;
  WeightedGraph replica_;
  std::function<Weight(const WeightedGraph&)> solve_;
};

class DistEngine : public WeightEngine<DynamicSssp> {
 public:
  DistEngine(const WeightedGraph& g, NodeId s, NodeId t)
      : WeightEngine(g, [s, t](const WeightedGraph& h) { return oracles::dijkstra_dist(h, s, t); },
                     s, t) {}
  Weight dynamic_value() const override { return dynamic_.query_dist(); }
};

class FlowEngine : public WeightEngine<DynamicMaxflow> {
 public:
  FlowEngine(const WeightedGraph& g, NodeId s, NodeId t)
      : WeightEngine(
            g, [s, t](const WeightedGraph& h) { return oracles::static_maxflow(h, s, t).value; },
            s, t) {}
  Weight dynamic_value() const override { return dynamic_.query_value(); }
};

class MwmEngine : public WeightEngine<DynamicMatching> {
 public:
  explicit MwmEngine(const WeightedGraph& g)
      : WeightEngine(g, [](const WeightedGraph& h) { return oracles::assignment_mwm(h); }) {}
  Weight dynamic_value() const override { return dynamic_.query_weight(); }
};

class MstEngine : public WeightEngine<DynamicMst> {
 public:
  explicit MstEngine(const WeightedGraph& g)
      : WeightEngine(g, [](const WeightedGraph& h) { return oracles::kruskal_mst(h).weight; }) {}
  Weight dynamic_value() const override { return dynamic_.query_weight(); }
};

class ConnEngine : public Engine {
 public:
  explicit ConnEngine(const WeightedGraph& g) : adapter_(g.node_count()) {
    for (const Edge& e : g.edges()) {
      adapter_.add_edge(e.u, e.v);
      edges_.emplace(e.u, e.v);
    }
  }

  void apply(const TraceEvent& event) override {
    const auto& edit = std::get<AdapterEdit>(event);
    const auto key = std::minmax(edit.u, edit.v);
    if (edit.add) {
      adapter_.add_edge(edit.u, edit.v);
      edges_.insert(key);
    } else {
      adapter_.remove_edge(edit.u, edit.v);
      edges_.erase(key);
    }
  }
  void apply_static_only(const TraceEvent& event) override {
    const auto& edit = std::get<AdapterEdit>(event);
    const auto key = std::minmax(edit.u, edit.v);
    if (edit.add) {
      edges_.insert(key);
    } else {
      edges_.erase(key);
    }
  }
  Weight dynamic_value() const override { return adapter_.is_connected() ? 1 : 0; }
  Weight static_value() const override {
    const std::vector<std::pair<NodeId, NodeId>> list(edges_.begin(), edges_.end());
    return oracles::connectivity(adapter_.node_count(), list) ? 1 : 0;
  }
  std::uint64_t last_work() const override { return adapter_.mst().last_work().total(); }

 private:
  ConnectivityAdapter adapter_;
  std::set<std::pair<NodeId, NodeId>> edges_;
};

std::optional<QueryKind> query_kind_of(Problem p) {
  switch (p) {
    case Problem::kDist: return QueryKind::kDist;
    case Problem::kFlow: return QueryKind::kFlow;
    case Problem::kMwm: return QueryKind::kMwm;
    case Problem::kMst: return QueryKind::kMst;
    case Problem::kConn: return QueryKind::kConn;
  }
  return std::nullopt;
}

void precheck(const WeightedGraph& g, const ChangeTrace& trace, const ReplayOptions& options) {
  validate_trace(g, trace);
  const bool conn = options.problem == Problem::kConn;
  for (std::size_t i = 0; i < trace.events.size(); ++i) {
    const auto& event = trace.events[i];
    const std::string where = "event " + std::to_string(i) + ": ";
    if (const auto* c = std::get_if<WeightChange>(&event)) {
      if (conn) throw ValidationError(where + "conn traces hold add/remove edits only");
      const Weight size = c->delta < 0 ? -c->delta : c->delta;
      if (options.max_delta && size > *options.max_delta) {
        throw ValidationError(where + "|delta| " + std::to_string(size) + " exceeds --max-delta " +
                              std::to_string(*options.max_delta));
      }
    } else if (const auto* q = std::get_if<Query>(&event)) {
      if (q->kind != query_kind_of(options.problem)) {
        throw ValidationError(where + "query '" + to_string(q->kind) +
                              "' does not match problem '" + to_string(options.problem) + "'");
      }
    } else if (!conn) {
      throw ValidationError(where + "add/remove edits need problem conn");
    }
  }
}

std::unique_ptr<Engine> make_engine(const WeightedGraph& g, const ReplayOptions& options) {
  const NodeId t = options.target == 0 ? g.node_count() : options.target;
  switch (options.problem) {
    case Problem::kDist: return std::make_unique<DistEngine>(g, options.source, t);
    case Problem::kFlow: return std::make_unique<FlowEngine>(g, options.source, t);
    case Problem::kMwm: return std::make_unique<MwmEngine>(g);
    case Problem::kMst: return std::make_unique<MstEngine>(g);
    case Problem::kConn: return std::make_unique<ConnEngine>(g);
  }
  throw ArgumentError("unknown problem");
}

const char* op_name(const TraceEvent& event) {
  if (std::holds_alternative<WeightChange>(event)) return "change";
  if (std::holds_alternative<Query>(event)) return "query";
  return std::get<AdapterEdit>(event).add ? "add" : "remove";
}

std::string value_text(Weight w) { return w == kInfinity ? "inf" : std::to_string(w); }

}  // namespace

std::string to_string(Problem problem) {
  switch (problem) {
    case Problem::kDist: return "dist";
    case Problem::kFlow: return "flow";
    case Problem::kMwm: return "mwm";
    case Problem::kMst: return "mst";
    case Problem::kConn: return "conn";
  }
  return "?";
}

std::optional<Problem> problem_from_string(std::string_view text) {
  for (Problem p : {Problem::kDist, Problem::kFlow, Problem::kMwm, Problem::kMst, Problem::kConn}) {
    if (text == to_string(p)) return p;
  }
  return std::nullopt;
}

ReplayReport replay(const WeightedGraph& g, const ChangeTrace& trace,
                    const ReplayOptions& options) {
  precheck(g, trace, options);
  auto engine = make_engine(g, options);
  ReplayReport report;
  report.records.reserve(trace.events.size());
  for (std::size_t i = 0; i < trace.events.size(); ++i) {
    const TraceEvent& event = trace.events[i];
    const bool is_query = std::holds_alternative<Query>(event);
    BenchRecord rec;
    rec.event_index = i;
    rec.op = op_name(event);

    const auto start = Clock::now();
    if (!is_query) {
      if (options.drop_change_at == i) {
        engine->apply_static_only(event);
      } else {
        engine->apply(event);
      }
    }
    rec.result_dynamic = engine->dynamic_value();
    rec.dynamic_ns = elapsed_ns(start);
    rec.dynamic_work = is_query ? 0 : engine->last_work();
    report.total_work += rec.dynamic_work;
    if (is_query) ++report.queries;

    const bool check = options.mode == CheckMode::kVerify ||
                       (options.mode == CheckMode::kBench && is_query);
    if (check) {
      const auto static_start = Clock::now();
      rec.result_static = engine->static_value();
      rec.static_ns = elapsed_ns(static_start);
      rec.match = *rec.result_static == rec.result_dynamic;
    }
    report.records.push_back(std::move(rec));
    if (!report.records.back().match) {
      report.mismatch = i;
      break;
    }
  }
  return report;
}

std::string to_csv(const std::vector<BenchRecord>& records) {
  std::string out(kCsvHeader);
  out += '\n';
  for (const auto& r : records) {
    out += std::to_string(r.event_index) + ',' + r.op + ',' + std::to_string(r.dynamic_ns) + ',';
    if (r.static_ns) out += std::to_string(*r.static_ns);
    out += ',' + std::to_string(r.dynamic_work) + ',' + value_text(r.result_dynamic) + ',';
    if (r.result_static) out += value_text(*r.result_static);
    out += ',';
    if (r.result_static) out += r.match ? "1" : "0";
    out += '\n';
  }
  return out;
}

}  // namespace wdg
