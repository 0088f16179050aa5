#include "tempconn/text_format.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <limits>
#include <set>
#include <sstream>
#include <unordered_map>
#include <vector>

#include "tempconn/error.hpp"

namespace tempconn {

namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
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

template <typename T>
bool parse_uint(std::string_view tok, T& value) {
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  return ec == std::errc() && ptr == tok.data() + tok.size();
}

}  // namespace

TemporalGraph parse_temporal_graph(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  bool directed = false;
  std::size_t n = 0;
  bool names_allowed = false;
  std::vector<std::string> names;
  std::unordered_map<std::string, Vertex> by_name;
  std::vector<TemporalEdge> edges;
  std::set<std::pair<Vertex, Vertex>> seen;

  auto resolve = [&](std::string_view tok) -> Vertex {
    if (!names.empty()) {
      auto it = by_name.find(std::string(tok));
      if (it == by_name.end())
        throw ParseError(line_no, "unknown vertex name '" + std::string(tok) + "'");
      return it->second;
    }
    std::size_t v = 0;
    if (!parse_uint(tok, v))
      throw ParseError(line_no, "expected a vertex index, got '" + std::string(tok) + "'");
    if (v >= n)
      throw ParseError(line_no, "vertex index " + std::string(tok) + " out of range [0, " +
                                    std::to_string(n) + ")");
    return static_cast<Vertex>(v);
  };

  while (std::getline(in, line)) {
    ++line_no;
    auto toks = split_tokens(line);
    if (toks.empty() || toks.front().front() == '#') continue;

    if (!have_header) {
      if (toks.size() != 3 || toks[0] != "tg")
        throw ParseError(line_no, "malformed header, expected 'tg <directed|undirected> <n>'");
      if (toks[1] == "directed") {
        directed = true;
      } else if (toks[1] != "undirected") {
        throw ParseError(line_no, "unknown orientation '" + std::string(toks[1]) + "'");
      }
      if (!parse_uint(toks[2], n))
        throw ParseError(line_no, "malformed vertex count '" + std::string(toks[2]) + "'");
      if (n > std::numeric_limits<Vertex>::max())
        throw ParseError(line_no, "vertex count too large");
      have_header = true;
      names_allowed = true;
      continue;
    }

    if (toks[0] == "names") {
      if (!names_allowed) throw ParseError(line_no, "name table must directly follow the header");
      names_allowed = false;
      if (toks.size() - 1 != n)
        throw ParseError(line_no, "name table lists " + std::to_string(toks.size() - 1) +
                                      " names for " + std::to_string(n) + " vertices");
      for (std::size_t i = 1; i < toks.size(); ++i) {
        std::string name(toks[i]);
        if (!by_name.emplace(name, static_cast<Vertex>(i - 1)).second)
          throw ParseError(line_no, "duplicate vertex name '" + name + "'");
        names.push_back(std::move(name));
      }
      continue;
    }
    names_allowed = false;

    if (toks.size() < 3) throw ParseError(line_no, "edge line needs two endpoints and at least one label");
    Vertex u = resolve(toks[0]);
    Vertex v = resolve(toks[1]);
    if (u == v) throw ParseError(line_no, "self-loop at '" + std::string(toks[0]) + "'");
    TemporalEdge e{u, v, {}};
    for (std::size_t i = 2; i < toks.size(); ++i) {
      Time t = 0;
      if (!parse_uint(toks[i], t))
        throw ParseError(line_no, "label out of range: '" + std::string(toks[i]) + "'");
      if (!e.labels.empty() && t <= e.labels.back())
        throw ParseError(line_no, "labels must be strictly ascending");
      e.labels.push_back(t);
    }
    auto key = directed ? std::pair(u, v) : std::pair(std::min(u, v), std::max(u, v));
    if (!seen.insert(key).second)
      throw ParseError(line_no, "duplicate edge '" + std::string(toks[0]) + " " +
                                    std::string(toks[1]) + "'");
    edges.push_back(std::move(e));
  }
  if (!have_header) throw ParseError(line_no, "missing header");
  try {
    return TemporalGraph(directed, n, std::move(edges), std::move(names));
  } catch (const InvalidArgument& ex) {
    throw ParseError(0, ex.what());
  }
}

TemporalGraph parse_temporal_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_temporal_graph(in);
}

TemporalGraph read_temporal_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  return parse_temporal_graph(in);
}

void serialize_temporal_graph(const TemporalGraph& g, std::ostream& out) {
  out << "tg " << (g.directed() ? "directed" : "undirected") << ' ' << g.vertex_count() << '\n';
  if (g.has_names()) {
    out << "names";
    for (const auto& name : g.names()) out << ' ' << name;
    out << '\n';
  }
  for (const auto& e : g.edges()) {
    out << g.vertex_label(e.tail) << ' ' << g.vertex_label(e.head);
    for (Time t : e.labels) out << ' ' << t;
    out << '\n';
  }
}

std::string serialize_temporal_graph(const TemporalGraph& g) {
  std::ostringstream out;
  serialize_temporal_graph(g, out);
  return out.str();
}

}  // namespace tempconn
