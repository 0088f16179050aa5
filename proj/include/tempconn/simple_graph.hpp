#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "tempconn/temporal_graph.hpp"

namespace tempconn {

/// Static simple undirected graph. Edges keep insertion order, which the
/// gadget generators use as the edge ordering e_1..e_m.
class SimpleGraph {
 public:
  explicit SimpleGraph(std::size_t vertex_count = 0);
  /// Throws InvalidArgument on self-loops, parallel edges or bad endpoints.
  SimpleGraph(std::size_t vertex_count, std::span<const std::pair<Vertex, Vertex>> edges);

  /// Returns false (and changes nothing) when the edge already exists.
  bool add_edge(Vertex u, Vertex v);

  std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<std::pair<Vertex, Vertex>>& edges() const noexcept { return edges_; }
  const VertexSet& neighbors(Vertex v) const { return adjacency_.at(v); }
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }
  bool adjacent(Vertex u, Vertex v) const;
  std::size_t max_degree() const;

  /// Subgraph induced by a sorted vertex list, renumbered 0..|keep|-1.
  SimpleGraph induced(std::span<const Vertex> keep) const;

 private:
  std::vector<VertexSet> adjacency_;
  std::vector<std::pair<Vertex, Vertex>> edges_;
};

}  // namespace tempconn
