#include "wdg/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "wdg/error.hpp"

namespace wdg {
namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

// Iterates non-blank, non-comment lines with their 1-based numbers.
class LineReader {
 public:
  explicit LineReader(std::string_view text) : text_(text) {}

  bool next(std::vector<std::string_view>& tokens) {
    while (pos_ <= text_.size()) {
      std::size_t end = text_.find('\n', pos_);
      if (end == std::string_view::npos) end = text_.size();
      std::string_view line = text_.substr(pos_, end - pos_);
      pos_ = end + 1;
      ++line_no_;
      tokens = split_ws(line);
      if (tokens.empty() || tokens.front().front() == '#') continue;
      return true;
    }
    return false;
  }

  std::size_t line() const noexcept { return line_no_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_no_ = 0;
};

template <typename T>
T parse_number(std::string_view token, std::size_t line, const char* what) {
  T value{};
  const char* first = token.data();
  const char* last = token.data() + token.size();
  if (!token.empty() && token.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || first == last) {
    throw ParseError(line, std::string("bad ") + what + " '" + std::string(token) + "'");
  }
  return value;
}

void expect_arity(const std::vector<std::string_view>& tokens, std::size_t n,
                  std::size_t line) {
  if (tokens.size() != n) {
    throw ParseError(line, "expected " + std::to_string(n) + " fields, got " +
                               std::to_string(tokens.size()));
  }
}

// Shared by both parse_trace overloads. With g == nullptr, "=w" is rejected.
ChangeTrace parse_trace_impl(std::string_view text, const WeightedGraph* g) {
  LineReader reader(text);
  std::vector<std::string_view> tok;
  if (!reader.next(tok)) throw ParseError(reader.line(), "missing 't' header");
  if (tok[0] != "t") throw ParseError(reader.line(), "expected 't' header");
  expect_arity(tok, 2, reader.line());

  ChangeTrace trace;
  if (tok[1] != "unbounded") {
    trace.bound = parse_number<Weight>(tok[1], reader.line(), "bound");
    if (*trace.bound < 0) throw ParseError(reader.line(), "negative bound");
  }

  std::vector<Weight> weights;
  if (g) {
    for (const Edge& e : g->edges()) weights.push_back(e.w);
  }

  while (reader.next(tok)) {
    const std::size_t line = reader.line();
    if (tok[0] == "c") {
      expect_arity(tok, 4, line);
      WeightChange ch;
      ch.u = parse_number<NodeId>(tok[1], line, "node");
      ch.v = parse_number<NodeId>(tok[2], line, "node");
      std::string_view amount = tok[3];
      if (amount.empty()) throw ParseError(line, "empty change amount");
      if (amount.front() == '=') {
        if (!g) throw ParseError(line, "absolute weight needs a graph to resolve");
        const Weight target = parse_number<Weight>(amount.substr(1), line, "weight");
        auto e = g->find_edge(ch.u, ch.v);
        if (!e) throw ParseError(line, "no such edge");
        ch.delta = target - weights[*e];
      } else if (amount.front() == '+' || amount.front() == '-') {
        ch.delta = parse_number<Weight>(amount, line, "delta");
      } else {
        throw ParseError(line, "change amount must start with +, - or =");
      }
      if (trace.bound && (ch.delta > *trace.bound || -ch.delta > *trace.bound)) {
        throw ParseError(line, "delta " + std::to_string(ch.delta) + " exceeds bound " +
                                   std::to_string(*trace.bound));
      }
      if (g) {
        if (auto e = g->find_edge(ch.u, ch.v)) weights[*e] += ch.delta;
      }
      trace.events.emplace_back(ch);
    } else if (tok[0] == "q") {
      expect_arity(tok, 2, line);
      auto kind = query_kind_from_string(tok[1]);
      if (!kind) throw ParseError(line, "unknown query '" + std::string(tok[1]) + "'");
      trace.events.emplace_back(Query{*kind});
    } else if (tok[0] == "a" || tok[0] == "r") {
      expect_arity(tok, 3, line);
      AdapterEdit ed;
      ed.add = tok[0] == "a";
      ed.u = parse_number<NodeId>(tok[1], line, "node");
      ed.v = parse_number<NodeId>(tok[2], line, "node");
      trace.events.emplace_back(ed);
    } else {
      throw ParseError(line, "unknown record '" + std::string(tok[0]) + "'");
    }
  }
  return trace;
}

}  // namespace

WeightedGraph parse_graph(std::string_view text) {
  LineReader reader(text);
  std::vector<std::string_view> tok;
  if (!reader.next(tok)) throw ParseError(reader.line(), "missing 'p' header");
  if (tok[0] != "p") throw ParseError(reader.line(), "expected 'p' header");

  WeightedGraph g;
  std::size_t m = 0;
  const std::size_t header_line = reader.line();
  try {
    if (tok.size() >= 2 && tok[1] == "bipartite") {
      expect_arity(tok, 6, header_line);
      const auto left = parse_number<std::size_t>(tok[2], header_line, "left size");
      const auto right = parse_number<std::size_t>(tok[3], header_line, "right size");
      m = parse_number<std::size_t>(tok[4], header_line, "edge count");
      const auto w = parse_number<Weight>(tok[5], header_line, "weight bound");
      g = WeightedGraph::bipartite(left, right, w);
    } else {
      expect_arity(tok, 5, header_line);
      Orientation o;
      if (tok[1] == "directed") {
        o = Orientation::kDirected;
      } else if (tok[1] == "undirected") {
        o = Orientation::kUndirected;
      } else {
        throw ParseError(header_line, "unknown graph kind '" + std::string(tok[1]) + "'");
      }
      const auto n = parse_number<std::size_t>(tok[2], header_line, "node count");
      m = parse_number<std::size_t>(tok[3], header_line, "edge count");
      const auto w = parse_number<Weight>(tok[4], header_line, "weight bound");
      g = WeightedGraph(o, n, w);
    }
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(header_line, e.what());
  }

  std::size_t seen = 0;
  while (reader.next(tok)) {
    const std::size_t line = reader.line();
    if (tok[0] != "e") throw ParseError(line, "expected 'e' record");
    expect_arity(tok, 4, line);
    if (seen == m) throw ParseError(line, "more edges than declared");
    const auto u = parse_number<NodeId>(tok[1], line, "node");
    const auto v = parse_number<NodeId>(tok[2], line, "node");
    const auto w = parse_number<Weight>(tok[3], line, "weight");
    try {
      g.add_edge(u, v, w);
    } catch (const Error& e) {
      throw ParseError(line, e.what());
    }
    ++seen;
  }
  if (seen != m) {
    throw ParseError(reader.line(), "declared " + std::to_string(m) + " edges, found " +
                                        std::to_string(seen));
  }
  return g;
}

std::string serialize_graph(const WeightedGraph& g) {
  std::ostringstream out;
  if (const auto& bp = g.bipartition()) {
    out << "p bipartite " << bp->left << ' ' << bp->right;
  } else {
    out << "p " << (g.directed() ? "directed " : "undirected ") << g.node_count();
  }
  out << ' ' << g.edge_count() << ' ' << g.max_weight() << '\n';
  for (const Edge& e : g.edges()) out << "e " << e.u << ' ' << e.v << ' ' << e.w << '\n';
  return out.str();
}

ChangeTrace parse_trace(std::string_view text) { return parse_trace_impl(text, nullptr); }

ChangeTrace parse_trace(std::string_view text, const WeightedGraph& g) {
  ChangeTrace trace = parse_trace_impl(text, &g);
  validate_trace(g, trace);
  return trace;
}

std::string serialize_trace(const ChangeTrace& trace) {
  std::ostringstream out;
  out << "t ";
  if (trace.bound) {
    out << *trace.bound;
  } else {
    out << "unbounded";
  }
  out << '\n';
  for (const TraceEvent& ev : trace.events) {
    if (const auto* ch = std::get_if<WeightChange>(&ev)) {
      out << "c " << ch->u << ' ' << ch->v << ' ' << (ch->delta >= 0 ? "+" : "")
          << ch->delta << '\n';
    } else if (const auto* q = std::get_if<Query>(&ev)) {
      out << "q " << to_string(q->kind) << '\n';
    } else {
      const auto& ed = std::get<AdapterEdit>(ev);
      out << (ed.add ? "a " : "r ") << ed.u << ' ' << ed.v << '\n';
    }
  }
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ArgumentError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ArgumentError("cannot write '" + path + "'");
  out << contents;
}

}  // namespace wdg
