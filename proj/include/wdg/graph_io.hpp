#pragma once

#include <string>
#include <string_view>

#include "wdg/graph.hpp"

namespace wdg {

// Graph text format (LF separated, '#' starts a comment line):
//   p <directed|undirected> <n> <m> <W>     or   p bipartite <L> <R> <m> <W>
//   e <u> <v> <w>                           (m lines, nodes 1-indexed)
//
// Malformed lines throw ParseError; invariant violations (self-loop,
// duplicate, out-of-range weight) are reported as ParseError too, with the
// offending line number.
WeightedGraph parse_graph(std::string_view text);
std::string serialize_graph(const WeightedGraph& g);

// Trace text format:
//   t <c|unbounded>
//   c <u> <v> <+d|-d|=w>
//   q <dist|flow|mwm|mst|conn>
//   a <u> <v>    |   r <u> <v>
//
// This overload cannot resolve the absolute form "=w" and rejects it.
ChangeTrace parse_trace(std::string_view text);
// Resolves "=w" against the weights g has at that point of the replay, then
// runs validate_trace(g, ...). Validation failures surface as ValidationError.
ChangeTrace parse_trace(std::string_view text, const WeightedGraph& g);
// Always emits the delta form.
std::string serialize_trace(const ChangeTrace& trace);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace wdg
