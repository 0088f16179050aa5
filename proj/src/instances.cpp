#include "tempconn/instances.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "tempconn/error.hpp"

namespace tempconn {

void BipartiteGraph::validate() const {
  std::set<std::pair<Vertex, Vertex>> seen;
  for (auto [x, y] : edges) {
    if (x >= left || y >= right)
      throw InvalidArgument("bipartite edge (" + std::to_string(x) + ", " + std::to_string(y) +
                            ") out of range");
    if (!seen.insert({x, y}).second)
      throw InvalidArgument("repeated bipartite edge (" + std::to_string(x) + ", " +
                            std::to_string(y) + ")");
  }
}

void SatInstance::validate() const {
  if (clauses.empty()) throw InvalidArgument("formula has no clauses");
  for (const auto& clause : clauses) {
    if (clause.empty()) throw InvalidArgument("empty clause");
    for (const auto& lit : clause) {
      std::size_t bound = lit.side == Side::x ? nx : ny;
      if (lit.var >= bound) throw InvalidArgument("literal " + to_string(lit) + " is undeclared");
    }
  }
}

std::string to_string(const Literal& lit) {
  return std::string(lit.negated ? "-" : "") + (lit.side == Side::x ? "x" : "y") +
         std::to_string(lit.var + 1);
}

namespace {

bool literal_true(const Literal& lit, std::uint64_t bits) {
  bool value = (bits >> lit.var) & 1U;
  return lit.negated ? !value : value;
}

}  // namespace

bool clause_satisfied(const std::vector<Literal>& clause, std::uint64_t xs, std::uint64_t ys) {
  for (const auto& lit : clause)
    if (literal_true(lit, lit.side == Side::x ? xs : ys)) return true;
  return false;
}

bool side_fails_clause(const std::vector<Literal>& clause, Side side, std::uint64_t bits) {
  for (const auto& lit : clause)
    if (lit.side == side && literal_true(lit, bits)) return false;
  return true;
}

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

std::vector<Line> significant_lines(std::string_view text) {
  std::vector<Line> out;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    std::istringstream words(raw);
    std::vector<std::string> tokens;
    std::string w;
    while (words >> w) tokens.push_back(w);
    if (tokens.empty() || tokens.front().front() == '#') continue;
    out.push_back({number, std::move(tokens)});
  }
  return out;
}

std::size_t parse_count(const std::string& tok, std::size_t line, const char* what) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw ParseError(line, std::string("malformed ") + what + " '" + tok + "'");
  return value;
}

const Line& header(const std::vector<Line>& lines, const char* keyword, std::size_t arity) {
  if (lines.empty()) throw ParseError(0, std::string("missing '") + keyword + "' header");
  const Line& h = lines.front();
  if (h.tokens.front() != keyword || h.tokens.size() != arity + 1)
    throw ParseError(h.number, std::string("expected '") + keyword + "' header with " +
                                   std::to_string(arity) + " counts");
  return h;
}

std::pair<Vertex, Vertex> parse_pair(const Line& l) {
  if (l.tokens.size() != 2) throw ParseError(l.number, "expected two endpoints");
  return {static_cast<Vertex>(parse_count(l.tokens[0], l.number, "endpoint")),
          static_cast<Vertex>(parse_count(l.tokens[1], l.number, "endpoint"))};
}

Literal parse_literal(const std::string& tok, std::size_t line) {
  std::string_view s = tok;
  Literal lit;
  if (!s.empty() && s.front() == '-') {
    lit.negated = true;
    s.remove_prefix(1);
  }
  if (s.size() < 2 || (s.front() != 'x' && s.front() != 'y'))
    throw ParseError(line, "malformed literal '" + tok + "'");
  lit.side = s.front() == 'x' ? Side::x : Side::y;
  std::size_t index = parse_count(std::string(s.substr(1)), line, "variable number");
  if (index == 0) throw ParseError(line, "variables are numbered from 1");
  lit.var = static_cast<unsigned>(index - 1);
  return lit;
}

}  // namespace

SimpleGraph parse_simple_graph(std::string_view text) {
  auto lines = significant_lines(text);
  const Line& h = header(lines, "graph", 1);
  SimpleGraph g(parse_count(h.tokens[1], h.number, "vertex count"));
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto [u, v] = parse_pair(lines[i]);
    try {
      if (!g.add_edge(u, v)) throw ParseError(lines[i].number, "repeated edge");
    } catch (const InvalidArgument& e) {
      throw ParseError(lines[i].number, e.what());
    }
  }
  return g;
}

BipartiteGraph parse_bipartite(std::string_view text) {
  auto lines = significant_lines(text);
  const Line& h = header(lines, "bipartite", 2);
  BipartiteGraph bg;
  bg.left = parse_count(h.tokens[1], h.number, "part size");
  bg.right = parse_count(h.tokens[2], h.number, "part size");
  for (std::size_t i = 1; i < lines.size(); ++i) {
    bg.edges.push_back(parse_pair(lines[i]));
    try {
      bg.validate();
    } catch (const InvalidArgument& e) {
      throw ParseError(lines[i].number, e.what());
    }
  }
  return bg;
}

SatInstance parse_sat(std::string_view text) {
  auto lines = significant_lines(text);
  const Line& h = header(lines, "sat", 2);
  SatInstance phi;
  phi.nx = parse_count(h.tokens[1], h.number, "variable count");
  phi.ny = parse_count(h.tokens[2], h.number, "variable count");
  for (std::size_t i = 1; i < lines.size(); ++i) {
    std::vector<Literal> clause;
    for (const auto& tok : lines[i].tokens) {
      Literal lit = parse_literal(tok, lines[i].number);
      if ((lit.side == Side::x ? phi.nx : phi.ny) <= lit.var)
        throw ParseError(lines[i].number, "literal " + tok + " is undeclared");
      clause.push_back(lit);
    }
    phi.clauses.push_back(std::move(clause));
  }
  if (phi.clauses.empty()) throw ParseError(h.number, "formula has no clauses");
  return phi;
}

std::string format_simple_graph(const SimpleGraph& g) {
  std::ostringstream out;
  out << "graph " << g.vertex_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

std::string format_bipartite(const BipartiteGraph& h) {
  std::ostringstream out;
  out << "bipartite " << h.left << ' ' << h.right << '\n';
  for (auto [x, y] : h.edges) out << x << ' ' << y << '\n';
  return out.str();
}

std::string format_sat(const SatInstance& phi) {
  std::ostringstream out;
  out << "sat " << phi.nx << ' ' << phi.ny << '\n';
  for (const auto& clause : phi.clauses) {
    for (std::size_t i = 0; i < clause.size(); ++i) out << (i ? " " : "") << to_string(clause[i]);
    out << '\n';
  }
  return out.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace tempconn
