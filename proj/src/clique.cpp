#include "tempconn/clique.hpp"

#include <algorithm>
#include <boost/dynamic_bitset.hpp>
#include <string>

#include "tempconn/error.hpp"

namespace tempconn {

namespace {

using Bits = boost::dynamic_bitset<>;

class PivotSearch {
 public:
  PivotSearch(const SimpleGraph& g, const std::function<bool(const VertexSet&)>& visit,
              std::size_t max_cliques)
      : visit_(visit), max_cliques_(max_cliques) {
    const std::size_t n = g.vertex_count();
    adj_.assign(n, Bits(n));
    for (auto [u, v] : g.edges()) {
      adj_[u].set(v);
      adj_[v].set(u);
    }
  }

  void run() {
    const std::size_t n = adj_.size();
    if (n == 0) return;
    Bits p(n), x(n);
    p.set();
    expand(p, x);
  }

 private:
  // Returns false once the visitor asked to stop.
  bool expand(Bits p, Bits x) {
    if (p.none()) {
      if (x.any()) return true;
      if (++reported_ > max_cliques_)
        throw ResourceLimitError("maximal clique budget of " + std::to_string(max_cliques_) +
                                 " exceeded");
      VertexSet clique(current_);
      std::sort(clique.begin(), clique.end());
      return visit_(clique);
    }
    // Pivot: vertex of P u X with most neighbours in P.
    std::size_t pivot = Bits::npos, best = 0;
    for (const Bits* side : {&p, &x}) {
      for (auto u = side->find_first(); u != Bits::npos; u = side->find_next(u)) {
        std::size_t c = (adj_[u] & p).count();
        if (pivot == Bits::npos || c > best) {
          pivot = u;
          best = c;
        }
      }
    }
    Bits candidates = p - adj_[pivot];
    for (auto v = candidates.find_first(); v != Bits::npos; v = candidates.find_next(v)) {
      current_.push_back(static_cast<Vertex>(v));
      bool go_on = expand(p & adj_[v], x & adj_[v]);
      current_.pop_back();
      if (!go_on) return false;
      p.reset(v);
      x.set(v);
    }
    return true;
  }

  const std::function<bool(const VertexSet&)>& visit_;
  std::size_t max_cliques_;
  std::size_t reported_ = 0;
  std::vector<Bits> adj_;
  std::vector<Vertex> current_;
};

}  // namespace

void for_each_maximal_clique(const SimpleGraph& g,
                             const std::function<bool(const VertexSet&)>& visit,
                             std::size_t max_cliques) {
  PivotSearch(g, visit, max_cliques).run();
}

std::vector<VertexSet> maximal_cliques(const SimpleGraph& g, std::size_t max_cliques) {
  std::vector<VertexSet> out;
  for_each_maximal_clique(
      g,
      [&](const VertexSet& c) {
        out.push_back(c);
        return true;
      },
      max_cliques);
  std::sort(out.begin(), out.end());
  return out;
}

bool is_clique(const SimpleGraph& g, std::span<const Vertex> s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (!g.adjacent(s[i], s[j])) return false;
  return true;
}

}  // namespace tempconn
