#pragma once

// Brute-force reference implementations. Nothing here calls the
// reachability or components modules; each routine works from the
// definitions so the fast code can be checked against it.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "tempconn/components.hpp"
#include "tempconn/instances.hpp"
#include "tempconn/simple_graph.hpp"
#include "tempconn/temporal_graph.hpp"

namespace tempconn {

/// Nodes (v, t) for t = 0..lifetime, read as "at v, free to depart at time t
/// or later". Waiting arcs (v, t) -> (v, t+1). A non-strict traversal at time
/// t stays in layer t; a strict one lands in layer t+1, or only marks the head
/// as reached when t is the lifetime.
class TimeExpandedGraph {
 public:
  TimeExpandedGraph(const TemporalGraph& g, Model m);

  std::size_t node_count() const noexcept { return n_ * layers_; }

  /// Vertices reachable from `source` by walks whose labels are all at most
  /// `deadline` and whose vertices all satisfy `allowed` (empty = all).
  std::vector<char> reachable(Vertex source, Time deadline,
                              const std::vector<char>& allowed = {}) const;
  std::vector<char> reachable(Vertex source) const;

 private:
  struct Hop {
    Vertex to;
    Time label;
  };

  std::size_t n_;
  std::size_t layers_;
  Model model_;
  Time lifetime_;
  std::vector<std::vector<Hop>> out_;  // per vertex, sorted by label
};

bool oracle_reaches(const TemporalGraph& g, Vertex u, Vertex v, Model m);

/// Row u holds every v with u reaching v, including u itself.
std::vector<std::vector<char>> oracle_reach_matrix(const TemporalGraph& g, Model m);

/// Independent third check: tries every vertex-simple path with every label
/// choice. Intended for n <= 6 and small lifetimes.
bool oracle_reaches_by_paths(const TemporalGraph& g, Vertex u, Vertex v, Model m);

/// Vertex sets encoded as bit masks over n <= 63 vertices.
bool oracle_is_connected_mask(const TemporalGraph& g, std::uint64_t mask, const ComponentQuery& q);

/// Tests every non-empty subset and keeps the inclusion-maximal connected
/// ones. Throws ResourceLimitError when n exceeds `max_vertices`.
ComponentReport oracle_enumerate_components(const TemporalGraph& g, const ComponentQuery& q,
                                            std::size_t max_vertices = 15);

/// Largest k with a connected set of size k (the empty graph gives 0).
std::size_t oracle_max_component_size(const TemporalGraph& g, const ComponentQuery& q,
                                      std::size_t max_vertices = 15);

/// Exact clique number; edgeless graphs give 1, the empty graph 0.
std::size_t oracle_max_clique(const SimpleGraph& g, std::size_t max_vertices = 20);

/// Largest |A| * |B| with A x B contained in the edge set.
std::size_t oracle_biclique_edges(const BipartiteGraph& h, std::size_t max_vertices = 16);

/// Largest edge subset S such that any two disjoint edges of S are joined
/// by a third edge of S.
std::size_t oracle_2k2free_edges(const BipartiteGraph& h, std::size_t max_edges = 16);

/// X induces diameter <= 2 and no strict superset does. X = {} is never maximal.
bool oracle_is_maximal_2club(const SimpleGraph& g, const VertexSet& x,
                             std::size_t max_vertices = 15);

bool oracle_sat(const SatInstance& phi, std::size_t max_variables = 20);

}  // namespace tempconn
