#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "tempconn/temporal_graph.hpp"

namespace tempconn {

// Line-oriented graph format:
//
//   tg <directed|undirected> <n>
//   names <name_0> ... <name_{n-1}>      (optional, first record after header)
//   <u> <v> <t1> <t2> ...                 (one edge per line, labels ascending)
//
// Lines starting with '#' and blank lines are ignored. Endpoints are names
// when a name table is declared and 0-based indices otherwise.

/// Throws ParseError carrying the offending line number.
TemporalGraph parse_temporal_graph(std::istream& in);
TemporalGraph parse_temporal_graph(std::string_view text);
TemporalGraph read_temporal_graph_file(const std::string& path);

/// Edges in (tail, head) order, labels ascending. Re-parses to an equal graph.
void serialize_temporal_graph(const TemporalGraph& g, std::ostream& out);
std::string serialize_temporal_graph(const TemporalGraph& g);

}  // namespace tempconn
