#include "wdg/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include "wdg/error.hpp"
#include "wdg/gadgets.hpp"
#include "wdg/generate.hpp"
#include "wdg/graph_io.hpp"
#include "wdg/replay.hpp"

namespace wdg {
namespace {

struct RunArgs {
  std::string problem;
  std::vector<std::string> files;
  NodeId source = 1;
  NodeId target = 0;
  bool verify = false;
  bool bench = false;
  std::string csv_out;
  unsigned jobs = 1;
  std::optional<Weight> max_delta;
};

struct PairOutcome {
  int code = kExitOk;
  std::string out;
  std::string err;
};

void emit(std::ostream& os, std::string_view text) {
  if (!text.empty()) os << text;
}

PairOutcome run_pair(const RunArgs& a, Problem problem, std::size_t k, std::size_t pairs) {
  PairOutcome result;
  const std::string& graph_path = a.files[2 * k];
  const std::string& trace_path = a.files[2 * k + 1];
  const std::string tag = pairs > 1 ? "[" + std::to_string(k) + "] " : "";
  try {
    const WeightedGraph g = parse_graph(read_file(graph_path));
    const ChangeTrace trace = parse_trace(read_file(trace_path), g);
    ReplayOptions options;
    options.problem = problem;
    options.mode = a.verify ? CheckMode::kVerify : a.bench ? CheckMode::kBench : CheckMode::kNone;
    options.source = a.source;
    options.target = a.target;
    options.max_delta = a.max_delta;
    const ReplayReport report = replay(g, trace, options);

    std::ostringstream os;
    for (const auto& r : report.records) {
      if (r.op != "query") continue;
      os << tag << "query " << r.event_index << ' '
         << (r.result_dynamic == kInfinity ? "inf" : std::to_string(r.result_dynamic)) << '\n';
    }
    os << tag << "events " << report.records.size() << " queries " << report.queries
       << " work " << report.total_work << '\n';
    if (!a.csv_out.empty()) {
      const std::string path = pairs > 1 ? a.csv_out + "." + std::to_string(k) : a.csv_out;
      write_file(path, to_csv(report.records));
    }
    if (report.mismatch) {
      const auto& r = report.records.back();
      result.code = kExitMismatch;
      result.err = tag + "mismatch at event " + std::to_string(*report.mismatch) + ": dynamic " +
                   std::to_string(r.result_dynamic) + ", static " +
                   std::to_string(r.result_static.value_or(0)) + "\n";
    }
    result.out = os.str();
  } catch (const std::exception& e) {
    result.code = kExitUsage;
    result.err = tag + "error: " + e.what() + "\n";
  }
  return result;
}

int cmd_run(const RunArgs& a, std::ostream& out, std::ostream& err) {
  const auto problem = problem_from_string(a.problem);
  if (!problem) {
    err << "error: unknown problem '" << a.problem << "' (dist, flow, mwm, mst, conn)\n";
    return kExitUsage;
  }
  if (a.files.empty() || a.files.size() % 2 != 0) {
    err << "error: run expects graph/trace file pairs\n";
    return kExitUsage;
  }
  if (a.max_delta && *a.max_delta < 1) {
    err << "error: --max-delta must be at least 1\n";
    return kExitUsage;
  }
  const std::size_t pairs = a.files.size() / 2;
  std::vector<PairOutcome> outcomes(pairs);
  const std::size_t workers = std::clamp<std::size_t>(a.jobs, 1, pairs);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t k; (k = next++) < pairs;) outcomes[k] = run_pair(a, *problem, k, pairs);
  };
  std::vector<std::thread> pool;
  for (std::size_t i = 1; i < workers; ++i) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  int code = kExitOk;
  for (const auto& o : outcomes) {
    emit(out, o.out);
    emit(err, o.err);
    code = std::max(code, o.code);
  }
  return code;
}

void write_or_print(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
  } else {
    write_file(path, text);
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weight-dynamic graph algorithms: replay, benchmark and gadget tools", "wdg"};
  app.require_subcommand(1);

  RunArgs run;
  auto* run_cmd = app.add_subcommand("run", "Replay a change trace through a dynamic structure");
  run_cmd->add_option("problem", run.problem, "dist, flow, mwm, mst or conn")->required();
  run_cmd->add_option("files", run.files, "graph and trace files, in pairs")->required();
  run_cmd->add_option("--source,-s", run.source, "source node (dist, flow)");
  run_cmd->add_option("--target,-t", run.target, "target node, default n (dist, flow)");
  run_cmd->add_flag("--verify", run.verify, "recompute statically after every event");
  run_cmd->add_flag("--bench", run.bench, "recompute statically at query events");
  run_cmd->add_option("--csv-out", run.csv_out, "per-event CSV report");
  run_cmd->add_option("--jobs,-j", run.jobs, "pairs replayed concurrently")->check(CLI::PositiveNumber);
  run_cmd->add_option("--max-delta,--c", run.max_delta, "reject changes with larger |delta|");

  std::string oumv_file, oumv_csv;
  bool oumv_verify = false;
  auto* oumv_cmd = app.add_subcommand("oumv", "Solve an OuMv instance through dynamic SSSP");
  oumv_cmd->add_option("file", oumv_file, "OuMv instance")->required();
  oumv_cmd->add_flag("--verify", oumv_verify, "compare with the direct Boolean products");
  oumv_cmd->add_option("--csv-out", oumv_csv, "per-round CSV report");

  RandomGraphOptions gopt;
  std::uint64_t gseed = 0;
  bool directed = false;
  std::size_t left = 0, right = 0;
  std::string graph_out;
  auto* gg = app.add_subcommand("gen-graph", "Generate a random graph");
  gg->add_option("--n", gopt.nodes, "node count (non-bipartite)");
  gg->add_option("--left", left, "left side size (bipartite)");
  gg->add_option("--right", right, "right side size (bipartite)");
  gg->add_option("--density", gopt.density, "edge probability in (0,1]");
  gg->add_option("--max-weight,-W", gopt.max_weight, "maximum weight W");
  gg->add_option("--seed", gseed, "random seed")->required();
  gg->add_flag("--connected", gopt.connected, "plant a spanning tree first");
  gg->add_flag("--directed", directed, "directed edges");
  gg->add_option("--out,-o", graph_out, "output path, stdout when omitted");

  std::string trace_graph, trace_out, trace_query;
  RandomTraceOptions topt;
  std::size_t adapter_edits = 0;
  auto* gt = app.add_subcommand("gen-trace", "Generate a random change trace for a graph");
  gt->add_option("--graph", trace_graph, "graph file")->required();
  gt->add_option("--changes", topt.changes, "number of weight changes");
  gt->add_option("--c,--max-delta", topt.bound, "bound on |delta|")->check(CLI::PositiveNumber);
  gt->add_option("--seed", topt.seed, "random seed")->required();
  gt->add_option("--query", trace_query, "query kind emitted between changes");
  gt->add_option("--query-every", topt.query_every, "changes between queries")
      ->check(CLI::PositiveNumber);
  gt->add_option("--adapter-edits", adapter_edits, "emit an add/remove stream for conn instead");
  gt->add_option("--out,-o", trace_out, "output path, stdout when omitted");

  std::size_t on = 0, rounds = 0;
  double odensity = 0.5;
  std::uint64_t oseed = 0;
  std::string oumv_out;
  auto* go = app.add_subcommand("gen-oumv", "Generate a random OuMv instance");
  go->add_option("--n", on, "dimension")->required();
  go->add_option("--rounds", rounds, "number of rounds")->required();
  go->add_option("--density", odensity, "probability of a 1 bit");
  go->add_option("--seed", oseed, "random seed")->required();
  go->add_option("--out,-o", oumv_out, "output path, stdout when omitted");

  std::uint64_t vseed = 1;
  std::size_t samples = 1000;
  auto* vg = app.add_subcommand("verify-gadgets", "Check the gadget identities against oracles");
  vg->add_option("--seed", vseed, "random seed");
  vg->add_option("--samples", samples, "random instances per family");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*run_cmd) return cmd_run(run, out, err);

    if (*oumv_cmd) {
      const OuMvInstance inst = parse_oumv(read_file(oumv_file));
      const OuMvRun result = solve_oumv_via_sssp(inst);
      std::string csv = "round,changes,distance,output\n";
      for (std::size_t r = 0; r < result.outputs.size(); ++r) {
        out << (result.outputs[r] ? 1 : 0) << '\n';
        csv += std::to_string(r) + ',' + std::to_string(result.changes_per_round[r]) + ',' +
               std::to_string(result.distances[r]) + ',' + (result.outputs[r] ? "1" : "0") + '\n';
      }
      out << "rounds " << result.outputs.size() << " changes " << result.total_changes
          << " queries " << result.queries << " work " << result.work.total() << '\n';
      if (!oumv_csv.empty()) write_file(oumv_csv, csv);
      if (oumv_verify) {
        const auto expected = direct_outputs(inst);
        for (std::size_t r = 0; r < expected.size(); ++r) {
          if (expected[r] != result.outputs[r]) {
            err << "mismatch at round " << r << ": reduction " << result.outputs[r]
                << ", direct " << expected[r] << '\n';
            return kExitMismatch;
          }
        }
      }
      return kExitOk;
    }

    if (*gg) {
      gopt.seed = gseed;
      gopt.orientation = directed ? Orientation::kDirected : Orientation::kUndirected;
      WeightedGraph g;
      if (left > 0 || right > 0) {
        if (directed || gopt.connected || gopt.nodes != 0) {
          throw ArgumentError("--left/--right exclude --n, --directed and --connected");
        }
        g = random_bipartite_graph(left, right, gopt.density, gopt.max_weight, gseed);
      } else {
        g = random_graph(gopt);
      }
      write_or_print(graph_out, serialize_graph(g), out);
      return kExitOk;
    }

    if (*gt) {
      const WeightedGraph g = parse_graph(read_file(trace_graph));
      ChangeTrace trace;
      if (adapter_edits > 0) {
        trace = random_adapter_trace(g, adapter_edits, topt.seed);
      } else {
        if (!trace_query.empty()) {
          topt.query = query_kind_from_string(trace_query);
          if (!topt.query) throw ArgumentError("unknown query kind '" + trace_query + "'");
        }
        trace = random_trace(g, topt);
      }
      write_or_print(trace_out, serialize_trace(trace), out);
      return kExitOk;
    }

    if (*go) {
      write_or_print(oumv_out, serialize_oumv(random_oumv(on, rounds, odensity, oseed)), out);
      return kExitOk;
    }

    if (*vg) {
      bool all = true;
      for (const auto& check : verify_gadgets(vseed, samples)) {
        out << (check.passed ? "PASS " : "FAIL ") << check.name << " (" << check.instances
            << " instances)";
        if (!check.passed) out << ": " << check.detail;
        out << '\n';
        all = all && check.passed;
      }
      return all ? kExitOk : kExitMismatch;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace wdg
