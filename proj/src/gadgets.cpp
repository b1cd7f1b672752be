#include "wdg/gadgets.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "wdg/error.hpp"
#include "wdg/oracles.hpp"
#include "wdg/semi_matching.hpp"

namespace wdg {
namespace {

void check_bits(const BitVector& bits, std::size_t n, const char* what) {
  if (bits.size() != n) {
    throw ArgumentError(std::string(what) + " has length " + std::to_string(bits.size()) +
                        ", expected " + std::to_string(n));
  }
  for (auto bit : bits) {
    if (bit > 1) throw ArgumentError(std::string(what) + " holds a non-bit entry");
  }
}

Weight bit_weight(std::uint8_t bit) { return 3 - 2 * static_cast<Weight>(bit); }

// Splits "0110" or "0 1 1 0" into bits.
BitVector parse_bits(std::string_view line, std::size_t n, std::size_t line_no) {
  BitVector bits;
  for (char ch : line) {
    if (ch == '0' || ch == '1') {
      bits.push_back(static_cast<std::uint8_t>(ch - '0'));
    } else if (ch != ' ' && ch != '\t' && ch != '\r') {
      throw ParseError(line_no, std::string("unexpected character '") + ch + "'");
    }
  }
  if (bits.size() != n) {
    throw ParseError(line_no, "expected " + std::to_string(n) + " bits, got " +
                                  std::to_string(bits.size()));
  }
  return bits;
}

std::string bits_to_string(const BitVector& bits) {
  std::string out;
  for (auto bit : bits) out.push_back(static_cast<char>('0' + bit));
  return out;
}

WeightedGraph shift_transform(std::size_t n, std::span<const std::pair<NodeId, NodeId>> subgraph,
                              Weight inside, Weight outside) {
  if (n == 0) throw ArgumentError("K_{N,N} needs N >= 1");
  const Bipartition sides{n, n};
  std::vector<char> chosen(n * n, 0);
  for (auto [x, y] : subgraph) {
    if (sides.is_right(x) && sides.is_left(y)) std::swap(x, y);
    if (!sides.is_left(x) || !sides.is_right(y)) {
      throw StructuralError("pair (" + std::to_string(x) + "," + std::to_string(y) +
                            ") is not an edge of K_{N,N}");
    }
    chosen[(x - 1) * n + (y - n - 1)] = 1;
  }
  WeightedGraph h = WeightedGraph::bipartite(n, n, 2);
  for (NodeId l = 1; l <= n; ++l) {
    for (NodeId r = n + 1; r <= 2 * n; ++r) {
      h.add_edge(l, r, chosen[(l - 1) * n + (r - n - 1)] ? inside : outside);
    }
  }
  return h;
}

BitVector random_bits(std::size_t n, double density, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(density);
  BitVector bits(n);
  for (auto& bit : bits) bit = coin(rng) ? 1 : 0;
  return bits;
}

BitVector bits_of(std::uint64_t mask, std::size_t count, std::size_t offset) {
  BitVector bits(count);
  for (std::size_t i = 0; i < count; ++i) bits[i] = (mask >> (offset + i)) & 1U;
  return bits;
}

}  // namespace

void OuMvInstance::validate() const {
  if (n == 0) throw ArgumentError("OuMv needs n >= 1");
  if (matrix.size() != n) throw ArgumentError("matrix must have n rows");
  for (const auto& row : matrix) check_bits(row, n, "matrix row");
  for (const auto& round : rounds) {
    check_bits(round.u, n, "u");
    check_bits(round.v, n, "v");
  }
}

bool direct_product(const BitMatrix& m, const BitVector& u, const BitVector& v) {
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (!u[i]) continue;
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (v[j] && m[i][j]) return true;
    }
  }
  return false;
}

std::vector<bool> direct_outputs(const OuMvInstance& instance) {
  instance.validate();
  std::vector<bool> out;
  out.reserve(instance.rounds.size());
  for (const auto& round : instance.rounds) {
    out.push_back(direct_product(instance.matrix, round.u, round.v));
  }
  return out;
}

OuMvInstance parse_oumv(std::string_view text) {
  std::vector<std::pair<std::size_t, std::string_view>> lines;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto cut = text.find('\n');
    std::string_view line = text.substr(0, cut);
    text = cut == std::string_view::npos ? std::string_view{} : text.substr(cut + 1);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos || line[first] == '#') continue;
    lines.emplace_back(line_no, line);
  }
  if (lines.empty()) throw ParseError(1, "empty OuMv file");

  OuMvInstance inst;
  std::size_t rounds = 0;
  {
    std::istringstream header{std::string(lines[0].second)};
    std::string tag, extra;
    long long n = -1, r = -1;
    if (!(header >> tag >> n >> r) || tag != "omv" || (header >> extra)) {
      throw ParseError(lines[0].first, "expected 'omv <n> <rounds>'");
    }
    if (n < 1 || r < 0) throw ParseError(lines[0].first, "need n >= 1 and rounds >= 0");
    inst.n = static_cast<std::size_t>(n);
    rounds = static_cast<std::size_t>(r);
  }
  const std::size_t expected = 1 + inst.n + 2 * rounds;
  if (lines.size() != expected) {
    const std::size_t at = lines.size() < expected ? lines.back().first : lines[expected].first;
    throw ParseError(at, "expected " + std::to_string(expected) + " non-comment lines, got " +
                             std::to_string(lines.size()));
  }
  std::size_t k = 1;
  for (std::size_t i = 0; i < inst.n; ++i, ++k) {
    inst.matrix.push_back(parse_bits(lines[k].second, inst.n, lines[k].first));
  }
  for (std::size_t r = 0; r < rounds; ++r, k += 2) {
    inst.rounds.push_back({parse_bits(lines[k].second, inst.n, lines[k].first),
                           parse_bits(lines[k + 1].second, inst.n, lines[k + 1].first)});
  }
  return inst;
}

std::string serialize_oumv(const OuMvInstance& instance) {
  instance.validate();
  std::string out =
      "omv " + std::to_string(instance.n) + " " + std::to_string(instance.rounds.size()) + "\n";
  for (const auto& row : instance.matrix) out += bits_to_string(row) + "\n";
  for (const auto& round : instance.rounds) {
    out += bits_to_string(round.u) + "\n";
    out += bits_to_string(round.v) + "\n";
  }
  return out;
}

OuMvInstance random_oumv(std::size_t n, std::size_t rounds, double density,
                         std::uint64_t seed) {
  if (n == 0) throw ArgumentError("OuMv needs n >= 1");
  if (!(density >= 0.0 && density <= 1.0)) throw ArgumentError("density must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  OuMvInstance inst;
  inst.n = n;
  for (std::size_t i = 0; i < n; ++i) inst.matrix.push_back(random_bits(n, density, rng));
  for (std::size_t r = 0; r < rounds; ++r) {
    BitVector u = random_bits(n, density, rng);
    BitVector v = random_bits(n, density, rng);
    inst.rounds.push_back({std::move(u), std::move(v)});
  }
  return inst;
}

SpGadget::SpGadget(const BitMatrix& m) : n_(m.size()) {
  if (n_ == 0) throw ArgumentError("gadget needs a non-empty matrix");
  for (const auto& row : m) check_bits(row, n_, "matrix row");
  graph_ = WeightedGraph::bipartite(n_ + 1, n_ + 1, kMaxWeight);
  for (std::size_t i = 1; i <= n_; ++i) {
    for (std::size_t j = 1; j <= n_; ++j) graph_.add_edge(a(i), b(j), bit_weight(m[i - 1][j - 1]));
  }
  for (std::size_t i = 1; i <= n_; ++i) graph_.add_edge(a(i), s(), 3);
  for (std::size_t j = 1; j <= n_; ++j) graph_.add_edge(t(), b(j), 3);
  u_.assign(n_, 0);
  v_.assign(n_, 0);
}

std::vector<WeightChange> SpGadget::set_round_vectors(const BitVector& u, const BitVector& v) {
  check_bits(u, n_, "u");
  check_bits(v, n_, "v");
  std::vector<WeightChange> changes;
  for (std::size_t i = 0; i < n_; ++i) {
    if (u[i] != u_[i]) changes.push_back({a(i + 1), s(), bit_weight(u[i]) - bit_weight(u_[i])});
  }
  for (std::size_t j = 0; j < n_; ++j) {
    if (v[j] != v_[j]) changes.push_back({t(), b(j + 1), bit_weight(v[j]) - bit_weight(v_[j])});
  }
  for (const auto& c : changes) graph_.apply_change(c);
  u_ = u;
  v_ = v;
  return changes;
}

OuMvRun solve_oumv_via_sssp(const OuMvInstance& instance) {
  instance.validate();
  SpGadget gadget(instance.matrix);
  DynamicSssp sssp(gadget.graph(), gadget.s(), gadget.t());
  OuMvRun run;
  for (const auto& round : instance.rounds) {
    const auto changes = gadget.set_round_vectors(round.u, round.v);
    for (const auto& c : changes) sssp.apply(c);
    const Weight d = sssp.query_dist();
    ++run.queries;
    run.distances.push_back(d);
    run.outputs.push_back(sp_gadget_decision(d));
    run.changes_per_round.push_back(changes.size());
    run.total_changes += changes.size();
  }
  run.work = sssp.total_work();
  return run;
}

WeightedGraph matching_shift_transform(std::size_t n,
                                       std::span<const std::pair<NodeId, NodeId>> subgraph) {
  return shift_transform(n, subgraph, 2, 1);
}

WeightedGraph semimatching_shift_transform(std::size_t n,
                                           std::span<const std::pair<NodeId, NodeId>> subgraph) {
  return shift_transform(n, subgraph, 1, 2);
}

std::vector<std::pair<NodeId, NodeId>> random_bipartite_subgraph(std::size_t n, double density,
                                                                 std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(density);
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (NodeId l = 1; l <= n; ++l) {
    for (NodeId r = n + 1; r <= 2 * n; ++r) {
      if (coin(rng)) edges.emplace_back(l, r);
    }
  }
  return edges;
}

std::vector<GadgetCheck> verify_gadgets(std::uint64_t seed, std::size_t samples) {
  std::vector<GadgetCheck> checks;
  std::mt19937_64 rng(seed);

  auto claim = [](const BitMatrix& m, const BitVector& u, const BitVector& v,
                  GadgetCheck& check) {
    SpGadget gadget(m);
    gadget.set_round_vectors(u, v);
    const Weight d = oracles::dijkstra_dist(gadget.graph(), gadget.s(), gadget.t());
    const bool ok = direct_product(m, u, v) ? d == 3 : d >= 5;
    ++check.instances;
    if (!ok && check.passed) {
      check.passed = false;
      check.detail = "n=" + std::to_string(m.size()) + " distance " + std::to_string(d);
    }
  };

  {
    GadgetCheck check{"claim1 n=2 exhaustive", true, 0, {}};
    for (std::uint64_t mask = 0; mask < (1U << 8); ++mask) {
      BitMatrix m{bits_of(mask, 2, 0), bits_of(mask, 2, 2)};
      claim(m, bits_of(mask, 2, 4), bits_of(mask, 2, 6), check);
    }
    checks.push_back(check);
  }
  for (std::size_t n : {4, 8}) {
    GadgetCheck check{"claim1 n=" + std::to_string(n) + " random", true, 0, {}};
    std::uniform_real_distribution<double> dens(0.05, 0.6);
    for (std::size_t k = 0; k < samples; ++k) {
      const double p = dens(rng);
      BitMatrix m;
      for (std::size_t i = 0; i < n; ++i) m.push_back(random_bits(n, p, rng));
      const BitVector u = random_bits(n, p, rng);
      const BitVector v = random_bits(n, p, rng);
      claim(m, u, v, check);
    }
    checks.push_back(check);
  }
  {
    GadgetCheck check{"oumv reduction round trip", true, 0, {}};
    const std::size_t instances = std::max<std::size_t>(1, samples / 10);
    for (std::size_t k = 0; k < instances; ++k) {
      const std::size_t n = 1 + rng() % 16;
      const auto inst = random_oumv(n, n, 0.1 + 0.4 * (rng() % 5) / 4.0, rng());
      const auto run = solve_oumv_via_sssp(inst);
      ++check.instances;
      bool ok = run.outputs == direct_outputs(inst) && run.queries == inst.rounds.size();
      for (std::size_t c : run.changes_per_round) ok = ok && c <= 2 * n;
      if (!ok && check.passed) {
        check.passed = false;
        check.detail = "instance " + std::to_string(k) + " n=" + std::to_string(n);
      }
    }
    checks.push_back(check);
  }
  GadgetCheck mwm{"matching shift identity", true, 0, {}};
  GadgetCheck semi{"semi-matching shift identity", true, 0, {}};
  const std::size_t per_n = std::max<std::size_t>(1, samples / 5);
  for (std::size_t n = 2; n <= 5; ++n) {
    for (std::size_t k = 0; k < per_n; ++k) {
      const auto sub = random_bipartite_subgraph(n, 0.15 + 0.1 * (k % 6), rng());
      const auto mcm = static_cast<Weight>(oracles::bruteforce_mcm(2 * n, sub));
      const Weight nn = static_cast<Weight>(n);
      ++mwm.instances;
      const Weight got = oracles::bruteforce_mwm(matching_shift_transform(n, sub));
      if (got != nn + mcm && mwm.passed) {
        mwm.passed = false;
        mwm.detail = "N=" + std::to_string(n) + " MWM " + std::to_string(got);
      }
      ++semi.instances;
      const Weight cost = semi::optimal_semi_matching(semimatching_shift_transform(n, sub)).cost;
      if (cost != 2 * nn - mcm && semi.passed) {
        semi.passed = false;
        semi.detail = "N=" + std::to_string(n) + " cost " + std::to_string(cost);
      }
    }
  }
  checks.push_back(mwm);
  checks.push_back(semi);
  return checks;
}

}  // namespace wdg
