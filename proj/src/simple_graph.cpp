#include "tempconn/simple_graph.hpp"

#include <algorithm>
#include <string>

#include "tempconn/error.hpp"

namespace tempconn {

SimpleGraph::SimpleGraph(std::size_t vertex_count) : adjacency_(vertex_count) {}

SimpleGraph::SimpleGraph(std::size_t vertex_count,
                         std::span<const std::pair<Vertex, Vertex>> edges)
    : adjacency_(vertex_count) {
  for (auto [u, v] : edges)
    if (!add_edge(u, v))
      throw InvalidArgument("parallel edge " + std::to_string(u) + "-" + std::to_string(v));
}

bool SimpleGraph::add_edge(Vertex u, Vertex v) {
  if (u >= vertex_count() || v >= vertex_count())
    throw InvalidArgument("edge endpoint out of range");
  if (u == v) throw InvalidArgument("self-loop at vertex " + std::to_string(u));
  auto& nu = adjacency_[u];
  auto it = std::lower_bound(nu.begin(), nu.end(), v);
  if (it != nu.end() && *it == v) return false;
  nu.insert(it, v);
  auto& nv = adjacency_[v];
  nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
  edges_.emplace_back(u, v);
  return true;
}

bool SimpleGraph::adjacent(Vertex u, Vertex v) const {
  const auto& nu = adjacency_.at(u);
  return std::binary_search(nu.begin(), nu.end(), v);
}

std::size_t SimpleGraph::max_degree() const {
  std::size_t best = 0;
  for (const auto& nb : adjacency_) best = std::max(best, nb.size());
  return best;
}

SimpleGraph SimpleGraph::induced(std::span<const Vertex> keep) const {
  SimpleGraph out(keep.size());
  for (auto [u, v] : edges_) {
    auto iu = std::lower_bound(keep.begin(), keep.end(), u);
    auto iv = std::lower_bound(keep.begin(), keep.end(), v);
    if (iu != keep.end() && *iu == u && iv != keep.end() && *iv == v)
      out.add_edge(static_cast<Vertex>(iu - keep.begin()), static_cast<Vertex>(iv - keep.begin()));
  }
  return out;
}

}  // namespace tempconn
