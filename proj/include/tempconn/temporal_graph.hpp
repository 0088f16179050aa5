#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tempconn {

using Vertex = std::uint32_t;
using Time = std::uint32_t;

/// Sorted, duplicate-free vertex list.
using VertexSet = std::vector<Vertex>;

enum class Model { strict, non_strict };

std::string_view to_string(Model m);

struct TemporalEdge {
  Vertex tail = 0;
  Vertex head = 0;
  std::vector<Time> labels;

  friend bool operator==(const TemporalEdge&, const TemporalEdge&) = default;
};

/// One availability of an edge in a given direction. Undirected edges yield
/// an arc in each direction.
struct Arc {
  Vertex from = 0;
  Vertex to = 0;
};

/// The static (di)graph G_i of edges available at timestep i.
struct Snapshot {
  Time index = 0;
  bool directed = false;
  std::size_t vertex_count = 0;
  std::vector<std::pair<Vertex, Vertex>> edges;
};

/// An immutable temporal (di)graph.
///
/// Edges are stored canonically: sorted by (tail, head), and for undirected
/// graphs with tail < head. Label sets are sorted and duplicate-free. The
/// constructor validates every invariant and throws InvalidArgument.
///
/// Besides the edge list, the graph keeps a time-sliced arc index: all arcs
/// grouped by label in ascending order, and within a slice sorted by source
/// vertex. Reachability sweeps walk the slices in order.
class TemporalGraph {
 public:
  TemporalGraph() = default;
  TemporalGraph(bool directed, std::size_t vertex_count,
                std::vector<TemporalEdge> edges,
                std::vector<std::string> names = {});

  bool directed() const noexcept { return directed_; }
  std::size_t vertex_count() const noexcept { return vertex_count_; }
  const std::vector<TemporalEdge>& edges() const noexcept { return edges_; }

  /// Largest label present, 0 for an edgeless graph.
  Time lifetime() const noexcept { return lifetime_; }
  /// Number of temporal edges, the sum of label-set sizes.
  std::size_t temporal_edge_count() const noexcept { return temporal_edge_count_; }

  bool has_names() const noexcept { return !names_.empty(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  /// Declared name, or the decimal index when the graph is unnamed.
  std::string vertex_label(Vertex v) const;
  std::optional<Vertex> find_vertex(std::string_view name) const;

  /// Distinct labels in ascending order.
  const std::vector<Time>& times() const noexcept { return times_; }
  std::size_t slice_count() const noexcept { return times_.size(); }
  Time slice_time(std::size_t slice) const { return times_[slice]; }
  std::span<const Arc> slice_arcs(std::size_t slice) const;
  /// Arcs leaving `v` within one slice.
  std::span<const Arc> slice_out_arcs(std::size_t slice, Vertex v) const;

  /// Labels of the edge tail->head (either orientation when undirected), or
  /// nullptr when absent.
  const std::vector<Time>* labels_of(Vertex tail, Vertex head) const;

  friend bool operator==(const TemporalGraph& a, const TemporalGraph& b) {
    return a.directed_ == b.directed_ && a.vertex_count_ == b.vertex_count_ &&
           a.names_ == b.names_ && a.edges_ == b.edges_;
  }

 private:
  bool directed_ = false;
  std::size_t vertex_count_ = 0;
  std::vector<std::string> names_;
  std::vector<TemporalEdge> edges_;
  Time lifetime_ = 0;
  std::size_t temporal_edge_count_ = 0;

  std::vector<Time> times_;
  std::vector<std::size_t> slice_begin_;  // size times_.size() + 1
  std::vector<Arc> arcs_;
};

/// Accumulates (u, v, t) triples, merging labels of repeated edges. Undirected
/// pairs are normalized so `add(u, v, t)` and `add(v, u, t)` hit one edge.
class TemporalGraphBuilder {
 public:
  TemporalGraphBuilder(bool directed, std::size_t vertex_count);

  TemporalGraphBuilder& add(Vertex u, Vertex v, Time t);
  TemporalGraphBuilder& add(Vertex u, Vertex v, std::initializer_list<Time> ts);
  TemporalGraphBuilder& set_names(std::vector<std::string> names);

  TemporalGraph build() &&;

 private:
  bool directed_;
  std::size_t vertex_count_;
  std::vector<std::string> names_;
  std::vector<std::pair<std::pair<Vertex, Vertex>, Time>> entries_;
};

/// G_i: exactly the edges e with i in lambda(e). Throws InvalidArgument when
/// i exceeds the lifetime.
Snapshot snapshot(const TemporalGraph& g, Time i);

/// Merge opposite arcs of a directed graph into undirected edges carrying the
/// union of both label sets.
TemporalGraph underlying_undirected(const TemporalGraph& g);

/// The temporal subgraph induced by `keep` (sorted vertex list). Vertex i of
/// the result is keep[i]; names are carried over.
TemporalGraph induced_subgraph(const TemporalGraph& g, std::span<const Vertex> keep);

/// Throws InvalidArgument unless `s` is sorted, duplicate-free and in range.
void validate_vertex_set(const TemporalGraph& g, std::span<const Vertex> s);

/// Sort and deduplicate.
VertexSet make_vertex_set(std::vector<Vertex> vs);

}  // namespace tempconn
