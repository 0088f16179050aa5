#include "tempconn/random.hpp"

#include <algorithm>

#include "tempconn/error.hpp"

namespace tempconn {

namespace {

std::vector<Time> random_labels(Rng& rng, Time lo, Time hi) {
  std::vector<Time> labels;
  for (Time t = lo; t <= hi; ++t)
    if (rng.percent(50)) labels.push_back(t);
  if (labels.empty()) labels.push_back(static_cast<Time>(rng.between(lo, hi)));
  return labels;
}

}  // namespace

TemporalGraph random_temporal_graph(Rng& rng, const RandomGraphSpec& spec) {
  if (spec.max_label == 0 && !spec.allow_zero)
    throw InvalidArgument("label range is empty");
  const Time lo = spec.allow_zero ? 0 : 1;
  const auto n = static_cast<Vertex>(spec.vertices);
  std::vector<TemporalEdge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = spec.directed ? 0 : u + 1; v < n; ++v) {
      if (u == v || !rng.percent(spec.density)) continue;
      edges.push_back({u, v, random_labels(rng, lo, spec.max_label)});
    }
  }
  return TemporalGraph(spec.directed, n, std::move(edges));
}

SimpleGraph random_simple_graph(Rng& rng, std::size_t n, unsigned density) {
  SimpleGraph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (rng.percent(density)) g.add_edge(u, v);
  return g;
}

BipartiteGraph random_bipartite(Rng& rng, std::size_t left, std::size_t right, unsigned density) {
  BipartiteGraph h{left, right, {}};
  for (Vertex x = 0; x < left; ++x)
    for (Vertex y = 0; y < right; ++y)
      if (rng.percent(density)) h.edges.emplace_back(x, y);
  return h;
}

SatInstance random_sat(Rng& rng, std::size_t nx, std::size_t ny, std::size_t clauses,
                       std::size_t width) {
  if (nx + ny == 0) throw InvalidArgument("formula needs variables");
  SatInstance phi{nx, ny, {}};
  const std::size_t total = nx + ny;
  for (std::size_t i = 0; i < clauses; ++i) {
    std::size_t len = rng.between(1, std::min(width, total));
    std::vector<std::size_t> vars;
    while (vars.size() < len) {
      std::size_t v = rng.below(total);
      if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
    }
    std::sort(vars.begin(), vars.end());
    std::vector<Literal> clause;
    for (std::size_t v : vars) {
      Literal lit;
      lit.side = v < nx ? Side::x : Side::y;
      lit.var = static_cast<unsigned>(v < nx ? v : v - nx);
      lit.negated = rng.percent(50);
      clause.push_back(lit);
    }
    phi.clauses.push_back(std::move(clause));
  }
  return phi;
}

}  // namespace tempconn
