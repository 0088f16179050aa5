#include "tempconn/fpt.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <string>

#include "tempconn/error.hpp"

namespace tempconn {

std::uint64_t degree_cap(std::size_t k, std::size_t timesteps, Connectivity kind) {
  if (k < 2) throw InvalidArgument("degree caps need k >= 2");
  std::uint64_t base = kind == Connectivity::mutual ? k - 1 : k - 2;
  std::size_t exponent = kind == Connectivity::mutual ? timesteps : k - 1;
  std::uint64_t cap = 1;
  for (std::size_t i = 0; i < exponent; ++i) {
    if (__builtin_mul_overflow(cap, base, &cap))
      throw CapOverflowError("degree cap " + std::to_string(base) + "^" +
                             std::to_string(exponent) + " overflows 64 bits");
  }
  return cap;
}

bool fpt_supported(const TemporalGraph& g, const ComponentQuery& q) {
  return !g.directed() && q.model == Model::non_strict;
}

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

// A connected component of some snapshot with at least k vertices. Such a
// component is closed-connected in both senses under the non-strict model.
std::optional<VertexSet> large_snapshot_component(const TemporalGraph& g, std::size_t k) {
  const std::size_t n = g.vertex_count();
  for (std::size_t s = 0; s < g.slice_count(); ++s) {
    UnionFind uf(n);
    for (const Arc& a : g.slice_arcs(s)) uf.unite(a.from, a.to);
    std::vector<std::size_t> size(n, 0);
    for (std::size_t v = 0; v < n; ++v) ++size[uf.find(v)];
    for (std::size_t v = 0; v < n; ++v) {
      if (uf.find(v) != v || size[v] < k) continue;
      VertexSet comp;
      for (std::size_t w = 0; w < n; ++w)
        if (uf.find(w) == v) comp.push_back(static_cast<Vertex>(w));
      return comp;
    }
  }
  return std::nullopt;
}

struct Neighbor {
  Vertex to;
  const std::vector<Time>* labels;
};

std::vector<std::vector<Neighbor>> static_neighbors(const TemporalGraph& g) {
  std::vector<std::vector<Neighbor>> adj(g.vertex_count());
  for (const auto& e : g.edges()) {
    adj[e.tail].push_back({e.head, &e.labels});
    adj[e.head].push_back({e.tail, &e.labels});
  }
  for (auto& list : adj)
    std::sort(list.begin(), list.end(),
              [](const Neighbor& a, const Neighbor& b) { return a.to < b.to; });
  return adj;
}

// Depth-first search for a temporal path through k distinct vertices, taking
// the earliest usable label on each step. Any such path is a closed
// unilateral connected set.
class LongPathSearch {
 public:
  LongPathSearch(const std::vector<std::vector<Neighbor>>& adj, std::size_t k)
      : adj_(adj), k_(k), on_path_(adj.size(), 0) {}

  std::optional<VertexSet> run() {
    for (Vertex s = 0; s < adj_.size(); ++s) {
      path_.assign(1, s);
      on_path_[s] = 1;
      bool hit = extend(s, 0);
      on_path_[s] = 0;
      if (hit) return make_vertex_set(path_);
    }
    return std::nullopt;
  }

 private:
  bool extend(Vertex v, Time earliest) {
    if (path_.size() >= k_) return true;
    for (const Neighbor& nb : adj_[v]) {
      if (on_path_[nb.to]) continue;
      auto it = std::lower_bound(nb.labels->begin(), nb.labels->end(), earliest);
      if (it == nb.labels->end()) continue;
      path_.push_back(nb.to);
      on_path_[nb.to] = 1;
      bool hit = extend(nb.to, *it);
      on_path_[nb.to] = 0;
      if (hit) return true;
      path_.pop_back();
    }
    return false;
  }

  const std::vector<std::vector<Neighbor>>& adj_;
  std::size_t k_;
  std::vector<char> on_path_;
  std::vector<Vertex> path_;
};

// Cliques of `compat` inside N(u), grown in ascending order.
class NeighborhoodSearch {
 public:
  NeighborhoodSearch(const SimpleGraph& compat, ConnectivityTester& tester,
                     const ComponentQuery& q, std::size_t k)
      : compat_(compat), tester_(tester), q_(q), k_(k) {}

  std::optional<VertexSet> run(Vertex u) {
    u_ = u;
    chosen_.clear();
    if (extend(0)) return found_;
    return std::nullopt;
  }

 private:
  bool extend(std::size_t from) {
    const VertexSet& nbrs = compat_.neighbors(u_);
    if (chosen_.size() + 1 >= k_ && accept()) return true;
    if (q_.closure == Closure::open && chosen_.size() + 1 >= k_) return false;
    for (std::size_t i = from; i < nbrs.size(); ++i) {
      Vertex v = nbrs[i];
      bool fits = std::all_of(chosen_.begin(), chosen_.end(),
                              [&](Vertex c) { return compat_.adjacent(c, v); });
      if (!fits) continue;
      chosen_.push_back(v);
      if (extend(i + 1)) return true;
      chosen_.pop_back();
    }
    return false;
  }

  bool accept() {
    VertexSet s = chosen_;
    s.push_back(u_);
    std::sort(s.begin(), s.end());
    // Open sets only need to be cliques of the compatibility graph.
    if (q_.closure == Closure::closed && !tester_.connected(s, q_.kind, Closure::closed))
      return false;
    found_ = std::move(s);
    return true;
  }

  const SimpleGraph& compat_;
  ConnectivityTester& tester_;
  const ComponentQuery& q_;
  std::size_t k_;
  Vertex u_ = 0;
  VertexSet chosen_, found_;
};

}  // namespace

std::optional<VertexSet> fpt_find(const TemporalGraph& g, const ComponentQuery& q, std::size_t k,
                                  FptStats* stats) {
  if (!fpt_supported(g, q))
    throw UnsupportedQuery("the FPT search needs an undirected graph and the non-strict model");
  if (k == 0) throw InvalidArgument("k must be at least 1");
  FptStats local;
  FptStats& st = stats != nullptr ? *stats : local;
  st = FptStats{};
  st.trivial = true;

  const std::size_t n = g.vertex_count();
  if (k > n) return std::nullopt;
  if (k == 1) return VertexSet{0};
  if (k == 2) {
    // Any static edge is connected in every sense; without edges nothing reaches anything.
    if (g.edges().empty()) return std::nullopt;
    const auto& e = g.edges().front();
    return VertexSet{e.tail, e.head};
  }
  if (auto comp = large_snapshot_component(g, k)) return comp;
  if (q.kind == Connectivity::unilateral) {
    const auto adj = static_neighbors(g);
    for (Vertex u = 0; u < n; ++u) {
      if (adj[u].size() + 1 < k) continue;
      VertexSet s{u};
      for (std::size_t i = 0; i + 1 < k; ++i) s.push_back(adj[u][i].to);
      return make_vertex_set(std::move(s));
    }
    if (auto path = LongPathSearch(adj, k).run()) return path;
  }

  st.trivial = false;
  st.cap = degree_cap(k, g.slice_count(), q.kind);
  const auto r = reachability_digraph(g, q.model);
  const SimpleGraph compat = compatibility_graph(r, q.kind);
  for (Vertex u = 0; u < n; ++u)
    st.max_neighborhood = std::max(st.max_neighborhood, compat.degree(u));
  assert(st.max_neighborhood <= st.cap);

  ConnectivityTester tester(g, q.model);
  NeighborhoodSearch search(compat, tester, q, k);
  for (Vertex u = 0; u < n; ++u)
    if (auto hit = search.run(u)) return hit;
  return std::nullopt;
}

}  // namespace tempconn
