#include "tempconn/oracle.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <string>

#include "tempconn/error.hpp"

namespace tempconn {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw ResourceLimitError(what);
}

bool bit(std::uint64_t mask, std::size_t i) { return (mask >> i) & 1U; }

}  // namespace

TimeExpandedGraph::TimeExpandedGraph(const TemporalGraph& g, Model m)
    : n_(g.vertex_count()),
      layers_(static_cast<std::size_t>(g.lifetime()) + 1),
      model_(m),
      lifetime_(g.lifetime()),
      out_(g.vertex_count()) {
  for (const auto& e : g.edges()) {
    for (Time t : e.labels) {
      out_[e.tail].push_back({e.head, t});
      if (!g.directed()) out_[e.head].push_back({e.tail, t});
    }
  }
  for (auto& hops : out_)
    std::sort(hops.begin(), hops.end(), [](const Hop& a, const Hop& b) {
      return a.label != b.label ? a.label < b.label : a.to < b.to;
    });
}

std::vector<char> TimeExpandedGraph::reachable(Vertex source, Time deadline,
                                               const std::vector<char>& allowed) const {
  auto ok = [&](Vertex v) { return allowed.empty() || allowed[v]; };
  std::vector<char> seen(node_count(), 0);
  std::vector<char> reached(n_, 0);
  std::deque<std::pair<Vertex, Time>> queue;
  auto visit = [&](Vertex v, Time t) {
    std::size_t id = static_cast<std::size_t>(t) * n_ + v;
    if (seen[id]) return;
    seen[id] = 1;
    reached[v] = 1;
    queue.emplace_back(v, t);
  };
  visit(source, 0);
  while (!queue.empty()) {
    auto [v, t] = queue.front();
    queue.pop_front();
    if (t < lifetime_) visit(v, t + 1);
    for (const Hop& h : out_[v]) {
      if (h.label != t || h.label > deadline || !ok(h.to)) continue;
      if (model_ == Model::non_strict)
        visit(h.to, t);
      else if (t < lifetime_)
        visit(h.to, t + 1);
      else
        reached[h.to] = 1;
    }
  }
  return reached;
}

std::vector<char> TimeExpandedGraph::reachable(Vertex source) const {
  return reachable(source, lifetime_);
}

bool oracle_reaches(const TemporalGraph& g, Vertex u, Vertex v, Model m) {
  if (u >= g.vertex_count() || v >= g.vertex_count())
    throw InvalidArgument("vertex out of range");
  return TimeExpandedGraph(g, m).reachable(u)[v] != 0;
}

std::vector<std::vector<char>> oracle_reach_matrix(const TemporalGraph& g, Model m) {
  TimeExpandedGraph te(g, m);
  std::vector<std::vector<char>> rows;
  for (Vertex u = 0; u < g.vertex_count(); ++u) rows.push_back(te.reachable(u));
  return rows;
}

namespace {

struct PathSearch {
  const TemporalGraph& g;
  Model model;
  Vertex target;
  std::vector<char> on_path;

  bool from(Vertex v, bool started, Time last) {
    if (v == target) return true;
    for (Vertex w = 0; w < g.vertex_count(); ++w) {
      if (on_path[w]) continue;
      const auto* labels = g.labels_of(v, w);
      if (labels == nullptr) continue;
      for (Time t : *labels) {
        if (started && (model == Model::strict ? t <= last : t < last)) continue;
        on_path[w] = 1;
        bool hit = from(w, true, t);
        on_path[w] = 0;
        if (hit) return true;
      }
    }
    return false;
  }
};

}  // namespace

bool oracle_reaches_by_paths(const TemporalGraph& g, Vertex u, Vertex v, Model m) {
  if (u >= g.vertex_count() || v >= g.vertex_count())
    throw InvalidArgument("vertex out of range");
  PathSearch search{g, m, v, std::vector<char>(g.vertex_count(), 0)};
  search.on_path[u] = 1;
  return search.from(u, false, 0);
}

namespace {

bool pairs_connected(const std::vector<std::vector<char>>& rows, std::uint64_t mask,
                     Connectivity kind, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    if (!bit(mask, i)) continue;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!bit(mask, j)) continue;
      bool ij = rows[i][j] != 0, ji = rows[j][i] != 0;
      if (kind == Connectivity::mutual ? !(ij && ji) : !(ij || ji)) return false;
    }
  }
  return true;
}

bool closed_connected(const TimeExpandedGraph& te, std::uint64_t mask, Connectivity kind,
                      std::size_t n) {
  std::vector<char> allowed(n, 0);
  for (std::size_t i = 0; i < n; ++i) allowed[i] = bit(mask, i) ? 1 : 0;
  std::vector<std::vector<char>> rows(n);
  for (std::size_t i = 0; i < n; ++i)
    if (bit(mask, i)) rows[i] = te.reachable(static_cast<Vertex>(i), ~Time{0}, allowed);
  return pairs_connected(rows, mask, kind, n);
}

}  // namespace

bool oracle_is_connected_mask(const TemporalGraph& g, std::uint64_t mask, const ComponentQuery& q) {
  const std::size_t n = g.vertex_count();
  require(n <= 63, "oracle connectivity supports at most 63 vertices");
  TimeExpandedGraph te(g, q.model);
  if (q.closure == Closure::closed) return closed_connected(te, mask, q.kind, n);
  std::vector<std::vector<char>> rows(n);
  for (std::size_t i = 0; i < n; ++i)
    if (bit(mask, i)) rows[i] = te.reachable(static_cast<Vertex>(i));
  return pairs_connected(rows, mask, q.kind, n);
}

namespace {

std::vector<char> connected_masks(const TemporalGraph& g, const ComponentQuery& q,
                                  std::size_t max_vertices) {
  const std::size_t n = g.vertex_count();
  require(n <= max_vertices && n <= 30,
          "oracle enumeration bound of " + std::to_string(max_vertices) + " vertices exceeded");
  const std::uint64_t total = std::uint64_t{1} << n;
  TimeExpandedGraph te(g, q.model);
  std::vector<std::vector<char>> rows;
  if (q.closure == Closure::open)
    for (Vertex u = 0; u < n; ++u) rows.push_back(te.reachable(u));
  std::vector<char> conn(total, 0);
  for (std::uint64_t mask = 1; mask < total; ++mask)
    conn[mask] = q.closure == Closure::open ? pairs_connected(rows, mask, q.kind, n)
                                            : closed_connected(te, mask, q.kind, n);
  return conn;
}

}  // namespace

ComponentReport oracle_enumerate_components(const TemporalGraph& g, const ComponentQuery& q,
                                            std::size_t max_vertices) {
  const std::size_t n = g.vertex_count();
  auto conn = connected_masks(g, q, max_vertices);
  const std::uint64_t total = std::uint64_t{1} << n;
  // bigger[mask]: some strict superset of mask is connected.
  std::vector<char> bigger(total, 0);
  for (std::uint64_t mask = total; mask-- > 0;) {
    for (std::size_t i = 0; i < n && !bigger[mask]; ++i) {
      if (bit(mask, i)) continue;
      std::uint64_t up = mask | (std::uint64_t{1} << i);
      if (conn[up] || bigger[up]) bigger[mask] = 1;
    }
  }
  ComponentReport report{q, {}};
  for (std::uint64_t mask = 1; mask < total; ++mask) {
    if (!conn[mask] || bigger[mask]) continue;
    VertexSet s;
    for (std::size_t i = 0; i < n; ++i)
      if (bit(mask, i)) s.push_back(static_cast<Vertex>(i));
    report.components.push_back(std::move(s));
  }
  std::sort(report.components.begin(), report.components.end());
  return report;
}

std::size_t oracle_max_component_size(const TemporalGraph& g, const ComponentQuery& q,
                                      std::size_t max_vertices) {
  auto conn = connected_masks(g, q, max_vertices);
  std::size_t best = 0;
  for (std::uint64_t mask = 1; mask < conn.size(); ++mask)
    if (conn[mask]) best = std::max<std::size_t>(best, std::popcount(mask));
  return best;
}

namespace {

struct CliqueSearch {
  std::vector<std::uint32_t> adj;
  std::size_t best = 0;

  void grow(std::size_t size, std::uint32_t candidates) {
    if (candidates == 0) {
      best = std::max(best, size);
      return;
    }
    if (size + static_cast<std::size_t>(std::popcount(candidates)) <= best) return;
    std::uint32_t rest = candidates;
    while (rest != 0) {
      if (size + static_cast<std::size_t>(std::popcount(rest)) <= best) return;
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      grow(size + 1, rest & adj[v]);
    }
  }
};

}  // namespace

std::size_t oracle_max_clique(const SimpleGraph& g, std::size_t max_vertices) {
  const std::size_t n = g.vertex_count();
  require(n <= max_vertices && n <= 32,
          "oracle clique bound of " + std::to_string(max_vertices) + " vertices exceeded");
  CliqueSearch search;
  search.adj.assign(n, 0);
  for (auto [u, v] : g.edges()) {
    search.adj[u] |= std::uint32_t{1} << v;
    search.adj[v] |= std::uint32_t{1} << u;
  }
  std::uint32_t all = n == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1;
  search.grow(0, all);
  return search.best;
}

std::size_t oracle_biclique_edges(const BipartiteGraph& h, std::size_t max_vertices) {
  h.validate();
  require(h.left + h.right <= max_vertices && h.right <= 63,
          "oracle biclique bound of " + std::to_string(max_vertices) + " vertices exceeded");
  std::vector<std::uint64_t> nbrs(h.left, 0);
  for (auto [x, y] : h.edges) nbrs[x] |= std::uint64_t{1} << y;
  std::size_t best = 0;
  for (std::uint64_t a = 1; a < (std::uint64_t{1} << h.left); ++a) {
    std::uint64_t common = ~std::uint64_t{0};
    for (std::size_t x = 0; x < h.left; ++x)
      if (bit(a, x)) common &= nbrs[x];
    std::size_t b = static_cast<std::size_t>(std::popcount(common));
    best = std::max(best, static_cast<std::size_t>(std::popcount(a)) * b);
  }
  return best;
}

std::size_t oracle_2k2free_edges(const BipartiteGraph& h, std::size_t max_edges) {
  h.validate();
  const std::size_t m = h.edges.size();
  require(m <= max_edges && m <= 30,
          "oracle 2K2 bound of " + std::to_string(max_edges) + " edges exceeded");
  auto index_of = [&](Vertex x, Vertex y) -> int {
    for (std::size_t i = 0; i < m; ++i)
      if (h.edges[i] == std::make_pair(x, y)) return static_cast<int>(i);
    return -1;
  };
  // For each disjoint pair, the edges that would join them.
  struct Pair {
    std::uint32_t both;
    std::uint32_t joins;
  };
  std::vector<Pair> pairs;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      auto [x1, y1] = h.edges[i];
      auto [x2, y2] = h.edges[j];
      if (x1 == x2 || y1 == y2) continue;
      std::uint32_t joins = 0;
      if (int c = index_of(x1, y2); c >= 0) joins |= std::uint32_t{1} << c;
      if (int c = index_of(x2, y1); c >= 0) joins |= std::uint32_t{1} << c;
      pairs.push_back({(std::uint32_t{1} << i) | (std::uint32_t{1} << j), joins});
    }
  }
  std::size_t best = 0;
  for (std::uint32_t s = 0; s < (std::uint32_t{1} << m); ++s) {
    auto size = static_cast<std::size_t>(std::popcount(s));
    if (size <= best) continue;
    bool ok = std::all_of(pairs.begin(), pairs.end(), [&](const Pair& p) {
      return (s & p.both) != p.both || (s & p.joins) != 0;
    });
    if (ok) best = size;
  }
  return best;
}

namespace {

bool diameter_at_most_two(const SimpleGraph& g, std::uint32_t mask) {
  const std::size_t n = g.vertex_count();
  std::vector<std::uint32_t> adj(n, 0);
  for (auto [u, v] : g.edges()) {
    adj[u] |= std::uint32_t{1} << v;
    adj[v] |= std::uint32_t{1} << u;
  }
  for (std::size_t u = 0; u < n; ++u) {
    if (!bit(mask, u)) continue;
    std::uint32_t near = (std::uint32_t{1} << u) | (adj[u] & mask);
    std::uint32_t two = near;
    for (std::size_t w = 0; w < n; ++w)
      if (bit(near, w)) two |= adj[w] & mask;
    if ((two & mask) != mask) return false;
  }
  return true;
}

}  // namespace

bool oracle_is_maximal_2club(const SimpleGraph& g, const VertexSet& x, std::size_t max_vertices) {
  const std::size_t n = g.vertex_count();
  require(n <= max_vertices && n <= 31,
          "oracle 2-club bound of " + std::to_string(max_vertices) + " vertices exceeded");
  if (x.empty()) return false;
  std::uint32_t mask = 0;
  for (Vertex v : x) {
    if (v >= n) throw InvalidArgument("vertex out of range");
    mask |= std::uint32_t{1} << v;
  }
  if (!diameter_at_most_two(g, mask)) return false;
  const std::uint32_t all = (std::uint32_t{1} << n) - 1;
  const std::uint32_t outside = all & ~mask;
  // Every non-empty subset of the outside vertices, added to X.
  for (std::uint32_t extra = outside; extra != 0; extra = (extra - 1) & outside)
    if (diameter_at_most_two(g, mask | extra)) return false;
  return true;
}

bool oracle_sat(const SatInstance& phi, std::size_t max_variables) {
  phi.validate();
  require(phi.nx + phi.ny <= max_variables,
          "oracle SAT bound of " + std::to_string(max_variables) + " variables exceeded");
  for (std::uint64_t xs = 0; xs < (std::uint64_t{1} << phi.nx); ++xs)
    for (std::uint64_t ys = 0; ys < (std::uint64_t{1} << phi.ny); ++ys)
      if (std::all_of(phi.clauses.begin(), phi.clauses.end(),
                      [&](const auto& c) { return clause_satisfied(c, xs, ys); }))
        return true;
  return false;
}

}  // namespace tempconn
