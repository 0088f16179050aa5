#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "tempconn/simple_graph.hpp"
#include "tempconn/temporal_graph.hpp"

namespace tempconn {

/// v_0, t_1, v_1, ..., t_q, v_q stored as parallel arrays;
/// times.size() == vertices.size() - 1.
struct TemporalWalk {
  std::vector<Vertex> vertices;
  std::vector<Time> times;
};

enum class WalkDefect {
  none,
  empty,
  length_mismatch,
  vertex_out_of_range,
  missing_edge,
  label_unavailable,
  time_order,
};

std::string_view to_string(WalkDefect d);

struct WalkCheck {
  WalkDefect defect = WalkDefect::none;
  std::size_t step = 0;  // index of the offending step (0-based)

  explicit operator bool() const noexcept { return defect == WalkDefect::none; }
};

/// Validates an arbitrary walk; never throws.
WalkCheck check_temporal_walk(const TemporalGraph& g, const TemporalWalk& w, Model m);
bool is_temporal_walk(const TemporalGraph& g, const TemporalWalk& w, Model m);

/// The sets of vertices reachable from one source by walks finishing at time
/// at most i, for every timestep i. The source belongs to every set.
class ReachProfile {
 public:
  ReachProfile(Vertex source, Model model, VertexSet initial);

  Vertex source() const noexcept { return source_; }
  Model model() const noexcept { return model_; }

  /// Reachable set after timestep i.
  const VertexSet& at(Time i) const;
  /// Reachable set after the last timestep.
  const VertexSet& final_set() const;
  /// Sets for i = 0..lifetime.
  std::vector<VertexSet> dense(Time lifetime) const;

  /// Timesteps at which the set grew, ascending; `sets()[j]` holds the set
  /// after `growth_times()[j]`.
  const std::vector<Time>& growth_times() const noexcept { return times_; }
  const std::vector<VertexSet>& sets() const noexcept { return sets_; }

  void record(Time t, VertexSet s);

 private:
  Vertex source_;
  Model model_;
  VertexSet initial_;
  std::vector<Time> times_;
  std::vector<VertexSet> sets_;
};

/// Single-source sweep over the time slices. Non-strict: at each timestep the
/// reached set is closed under reachability inside that snapshot. Strict: each
/// timestep contributes at most one hop out of the set reached before it.
/// Runs in O(M log n) per source; reuse one instance across sources.
class ReachSweeper {
 public:
  ReachSweeper(const TemporalGraph& g, Model m);

  /// Marks every vertex reachable from `source`; read with `reached()`.
  void run(Vertex source);
  /// Same sweep restricted to walks whose vertices all satisfy `allowed`.
  void run(Vertex source, const std::vector<char>& allowed);
  ReachProfile profile(Vertex source);

  bool reached(Vertex v) const { return reach_slice_[v] != unreached; }
  VertexSet reached_set() const;

 private:
  static constexpr std::uint32_t unreached = ~std::uint32_t{0};

  template <typename OnSlice>
  void sweep(Vertex source, const std::vector<char>* allowed, OnSlice&& on_slice);

  const TemporalGraph& g_;
  Model model_;
  // Slice index (+1) at which each vertex was first reached; 0 for the source.
  std::vector<std::uint32_t> reach_slice_;
  std::vector<Vertex> stack_;
  std::vector<Vertex> touched_;
};

ReachProfile reach_profile(const TemporalGraph& g, Vertex u, Model m);
/// True iff a temporal u,v-walk exists; reaches(u, u) is true.
bool reaches(const TemporalGraph& g, Vertex u, Vertex v, Model m);

/// Irreflexive relation "u reaches v, u != v", stored as a dense bit matrix.
class ReachabilityDigraph {
 public:
  ReachabilityDigraph(std::size_t vertex_count, Model model);

  std::size_t vertex_count() const noexcept { return n_; }
  Model model() const noexcept { return model_; }
  bool has_arc(Vertex u, Vertex v) const {
    return (bits_[u * words_ + v / 64] >> (v % 64)) & 1U;
  }
  void set_arc(Vertex u, Vertex v) { bits_[u * words_ + v / 64] |= std::uint64_t{1} << (v % 64); }
  VertexSet out_neighbors(Vertex u) const;
  VertexSet in_neighbors(Vertex u) const;
  std::size_t arc_count() const;

  friend bool operator==(const ReachabilityDigraph&, const ReachabilityDigraph&) = default;

 private:
  std::size_t n_;
  Model model_;
  std::size_t words_;
  std::vector<std::uint64_t> bits_;
};

/// n single-source sweeps, O(n * M log n). `threads` > 1 splits the sources
/// across worker threads; the result does not depend on the split.
ReachabilityDigraph reachability_digraph(const TemporalGraph& g, Model m, unsigned threads = 1);

/// F: u-v adjacent iff both arcs are present.
SimpleGraph symmetric_core(const ReachabilityDigraph& r);
/// Underlying graph: u-v adjacent iff at least one arc is present.
SimpleGraph underlying_graph(const ReachabilityDigraph& r);

}  // namespace tempconn
