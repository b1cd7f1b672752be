#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "wdg/cli.hpp"
#include "wdg/dyn_mst.hpp"
#include "wdg/graph_io.hpp"
#include "wdg/replay.hpp"

using namespace wdg;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() /
            ("wdg_cli_test_" + std::to_string(reinterpret_cast<std::uintptr_t>(this)) + "_" +
             std::to_string(std::rand()));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string operator/(const std::string& name) const { return (path_ / name).string(); }

 private:
  fs::path path_;
};

}  // namespace

TEST_CASE("usage errors exit 2") {
  CHECK(cli({}).code == 2);
  CHECK(cli({"frobnicate"}).code == 2);
  CHECK(cli({"run", "dist"}).code == 2);
  CHECK(cli({"run", "sssp", "a", "b"}).code == 2);
  CHECK(cli({"run", "dist", "/nonexistent/g", "/nonexistent/t"}).code == 2);
  CHECK(cli({"gen-graph", "--n", "5"}).code == 2);  // seed is required
  CHECK(cli({"--help"}).code == 0);
}

TEST_CASE("generators are deterministic") {
  TempDir dir;
  const auto a = cli({"gen-graph", "--n", "12", "--density", "0.4", "-W", "5", "--seed", "7",
                      "--connected"});
  const auto b = cli({"gen-graph", "--n", "12", "--density", "0.4", "-W", "5", "--seed", "7",
                      "--connected"});
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  const auto g = parse_graph(a.out);
  CHECK_NOTHROW(DynamicMst{g});

  write_file(dir / "g.txt", a.out);
  const auto t1 = cli({"gen-trace", "--graph", dir / "g.txt", "--changes", "50", "--c", "1",
                       "--seed", "3"});
  const auto t2 = cli({"gen-trace", "--graph", dir / "g.txt", "--changes", "50", "--c", "1",
                       "--seed", "3"});
  REQUIRE(t1.code == 0);
  CHECK(t1.out == t2.out);
  const auto trace = parse_trace(t1.out, g);
  for (const auto& ev : trace.events) {
    const auto& c = std::get<WeightChange>(ev);
    CHECK((c.delta == 1 || c.delta == -1));
  }

  CHECK(cli({"gen-oumv", "--n", "4", "--rounds", "3", "--seed", "1"}).out ==
        cli({"gen-oumv", "--n", "4", "--rounds", "3", "--seed", "1"}).out);
  CHECK(cli({"gen-graph", "--n", "10", "--density", "0.01", "--seed", "1", "--connected"}).code ==
        2);
}

TEST_CASE("run verify on generated pairs writes one CSV row per event") {
  TempDir dir;
  REQUIRE(cli({"gen-graph", "--n", "15", "--density", "0.3", "-W", "6", "--seed", "2",
               "--connected", "-o", dir / "g.txt"})
              .code == 0);
  for (const std::string problem : {"dist", "flow", "mst"}) {
    REQUIRE(cli({"gen-trace", "--graph", dir / "g.txt", "--changes", "200", "--c", "2",
                 "--seed", "4", "--query", problem, "--query-every", "20", "-o",
                 dir / (problem + ".tr")})
                .code == 0);
    const auto r = cli({"run", problem, dir / "g.txt", dir / (problem + ".tr"), "--verify",
                        "--csv-out", dir / (problem + ".csv")});
    INFO(r.err);
    CHECK(r.code == 0);
    const auto csv = read_file(dir / (problem + ".csv"));
    CHECK(csv.rfind(std::string(kCsvHeader) + "\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 211);
  }

  REQUIRE(cli({"gen-graph", "--left", "4", "--right", "5", "--density", "0.7", "-W", "6",
               "--seed", "5", "-o", dir / "b.txt"})
              .code == 0);
  REQUIRE(cli({"gen-trace", "--graph", dir / "b.txt", "--changes", "100", "--seed", "6",
               "--query", "mwm", "-o", dir / "b.tr"})
              .code == 0);
  CHECK(cli({"run", "mwm", dir / "b.txt", dir / "b.tr", "--bench"}).code == 0);

  REQUIRE(cli({"gen-trace", "--graph", dir / "g.txt", "--adapter-edits", "100", "--seed", "7",
               "-o", dir / "c.tr"})
              .code == 0);
  CHECK(cli({"run", "conn", dir / "g.txt", dir / "c.tr", "--verify"}).code == 0);
}

TEST_CASE("multiple pairs run concurrently") {
  TempDir dir;
  std::vector<std::string> args{"run", "dist"};
  for (int k = 0; k < 4; ++k) {
    const std::string g = dir / ("g" + std::to_string(k)), t = dir / ("t" + std::to_string(k));
    REQUIRE(cli({"gen-graph", "--n", "12", "--density", "0.4", "-W", "4", "--seed",
                 std::to_string(k), "--connected", "-o", g})
                .code == 0);
    REQUIRE(cli({"gen-trace", "--graph", g, "--changes", "100", "--seed", std::to_string(k),
                 "--query", "dist", "-o", t})
                .code == 0);
    args.push_back(g);
    args.push_back(t);
  }
  args.insert(args.end(), {"--verify", "--jobs", "3", "--csv-out", dir / "out.csv"});
  const auto r = cli(args);
  CHECK(r.code == 0);
  for (int k = 0; k < 4; ++k) CHECK(fs::exists(dir / ("out.csv." + std::to_string(k))));
  args.resize(args.size() - 5);
  args.push_back("--verify");
  CHECK(cli(args).out == r.out);
}

TEST_CASE("bound violations exit 2 before any event") {
  TempDir dir;
  write_file(dir / "g.txt", "p undirected 3 2 9\ne 1 2 1\ne 2 3 1\n");
  write_file(dir / "over.tr", "t 1\nc 1 2 +3\n");
  write_file(dir / "ok.tr", "t 3\nc 1 2 +3\nq dist\n");
  auto r = cli({"run", "dist", dir / "g.txt", dir / "over.tr", "--verify"});
  CHECK(r.code == 2);
  CHECK(r.out.empty());
  CHECK(cli({"run", "dist", dir / "g.txt", dir / "ok.tr", "--max-delta", "2"}).code == 2);
  r = cli({"run", "dist", dir / "g.txt", dir / "ok.tr"});
  CHECK(r.code == 0);
  CHECK(r.out.find("query 1 5") != std::string::npos);
}

TEST_CASE("oumv subcommand") {
  TempDir dir;
  write_file(dir / "one.omv", "omv 1 1\n1\n1\n1\n");
  auto r = cli({"oumv", dir / "one.omv", "--verify"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("1\n", 0) == 0);

  write_file(dir / "zero.omv", "omv 2 2\n00\n00\n11\n11\n10\n01\n");
  r = cli({"oumv", dir / "zero.omv"});
  CHECK(r.out.rfind("0\n0\n", 0) == 0);

  REQUIRE(cli({"gen-oumv", "--n", "16", "--rounds", "16", "--density", "0.1", "--seed", "9",
               "-o", dir / "g.omv"})
              .code == 0);
  r = cli({"oumv", dir / "g.omv", "--verify", "--csv-out", dir / "o.csv"});
  CHECK(r.code == 0);
  CHECK(r.out.find("queries 16") != std::string::npos);

  write_file(dir / "bad.omv", "omv 2 1\n01\n");
  CHECK(cli({"oumv", dir / "bad.omv"}).code == 2);
}

TEST_CASE("verify-gadgets") {
  const auto r = cli({"verify-gadgets", "--samples", "50", "--seed", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(r.out.find("PASS claim1 n=2 exhaustive (256 instances)") != std::string::npos);
}
