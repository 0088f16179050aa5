#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "tempconn/simple_graph.hpp"

namespace tempconn {

/// Bron-Kerbosch with Tomita pivoting. `visit` receives each maximal clique
/// (sorted) and returns false to stop early. Throws ResourceLimitError once
/// more than `max_cliques` cliques have been reported.
void for_each_maximal_clique(const SimpleGraph& g,
                             const std::function<bool(const VertexSet&)>& visit,
                             std::size_t max_cliques);

/// All maximal cliques, sorted lexicographically.
std::vector<VertexSet> maximal_cliques(const SimpleGraph& g, std::size_t max_cliques);

bool is_clique(const SimpleGraph& g, std::span<const Vertex> s);

}  // namespace tempconn
