#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tempconn/simple_graph.hpp"

namespace tempconn {

/// Bipartite graph with parts X = {0..left-1} and Y = {0..right-1}; an edge
/// (x, y) joins x in X to y in Y.
struct BipartiteGraph {
  std::size_t left = 0;
  std::size_t right = 0;
  std::vector<std::pair<Vertex, Vertex>> edges;

  /// Throws InvalidArgument on out-of-range endpoints or repeated edges.
  void validate() const;
};

enum class Side { x, y };

struct Literal {
  Side side = Side::x;
  unsigned var = 0;  // 0-based within its side
  bool negated = false;

  friend bool operator==(const Literal&, const Literal&) = default;
};

/// CNF formula over two variable blocks of sizes nx and ny.
struct SatInstance {
  std::size_t nx = 0;
  std::size_t ny = 0;
  std::vector<std::vector<Literal>> clauses;

  /// Throws InvalidArgument when a literal names an undeclared variable or
  /// there are no clauses.
  void validate() const;
};

/// "x1", "-y2": 1-based variable numbers, '-' for negation.
std::string to_string(const Literal& lit);

/// Bit i of `xs` (resp. `ys`) is the value of variable i on that side.
bool clause_satisfied(const std::vector<Literal>& clause, std::uint64_t xs, std::uint64_t ys);

/// True iff the assignment of one side falsifies every literal of the clause
/// on that side (vacuously true when the clause has none).
bool side_fails_clause(const std::vector<Literal>& clause, Side side, std::uint64_t bits);

// Text formats, '#' comments and blank lines ignored:
//   graph <n>              then one "u v" line per edge (0-based)
//   bipartite <p> <q>      then one "x y" line per edge
//   sat <nx> <ny>          then one clause per line, e.g. "x1 -x2 y1"
SimpleGraph parse_simple_graph(std::string_view text);
BipartiteGraph parse_bipartite(std::string_view text);
SatInstance parse_sat(std::string_view text);

std::string format_simple_graph(const SimpleGraph& g);
std::string format_bipartite(const BipartiteGraph& h);
std::string format_sat(const SatInstance& phi);

/// Whole-file reader shared by the CLI.
std::string read_text_file(const std::string& path);

}  // namespace tempconn
