#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wdg/graph.hpp"

namespace wdg {

enum class Problem { kDist, kFlow, kMwm, kMst, kConn };

std::string to_string(Problem problem);
std::optional<Problem> problem_from_string(std::string_view text);

enum class CheckMode {
  kNone,    // replay only
  kBench,   // static recomputation at query events
  kVerify,  // static recomputation after every event, fail fast
};

struct ReplayOptions {
  Problem problem = Problem::kDist;
  CheckMode mode = CheckMode::kNone;
  NodeId source = 1;
  NodeId target = 0;  // 0 selects node n
  std::optional<Weight> max_delta;  // extra bound imposed on top of the trace's own
  // Fault injection for harness tests: the dynamic structure silently skips
  // the weight change at this event index while the static copy applies it.
  std::optional<std::size_t> drop_change_at;
};

struct BenchRecord {
  std::size_t event_index = 0;
  std::string op;  // "change", "query", "add" or "remove"
  std::int64_t dynamic_ns = 0;
  std::optional<std::int64_t> static_ns;
  std::uint64_t dynamic_work = 0;
  Weight result_dynamic = 0;
  std::optional<Weight> result_static;
  bool match = true;  // dynamic == static when a static result exists
};

struct ReplayReport {
  std::vector<BenchRecord> records;
  std::optional<std::size_t> mismatch;  // first event whose results differ
  std::size_t queries = 0;
  std::uint64_t total_work = 0;

  int exit_code() const noexcept { return mismatch ? 1 : 0; }
};

// Replays trace against the dynamic structure for the problem. The trace is
// validated in full before the first event; invalid input throws (Error
// subclasses). For kConn the graph supplies n and the initial edge set of
// the simulated graph and the trace holds add/remove edits.
ReplayReport replay(const WeightedGraph& g, const ChangeTrace& trace,
                    const ReplayOptions& options);

inline constexpr std::string_view kCsvHeader =
    "event_index,op,dynamic_ns,static_ns,dynamic_work,result_dynamic,result_static,match";

// Header plus one row per record. Columns without a static result are empty.
std::string to_csv(const std::vector<BenchRecord>& records);

}  // namespace wdg
