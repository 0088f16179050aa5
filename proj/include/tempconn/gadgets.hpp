#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tempconn/components.hpp"
#include "tempconn/instances.hpp"
#include "tempconn/simple_graph.hpp"
#include "tempconn/temporal_graph.hpp"

namespace tempconn {

/// What a gadget vertex stands for in the source instance.
enum class RoleKind {
  edge,          // line gadget: the source edge (x, y)
  vertex,        // source vertex u
  copy,          // u' (second copy of V)
  link,          // h_uv: subdivision vertex next to u on edge uv
  link_copy,     // h'_uv
  in,            // u^in
  out,           // u^out
  assignment_x,  // assignment of the X block, bits in `a`
  assignment_y,  // assignment of the Y block
  clause,        // clause index in `a`
  hub,           // s, or one of the hubs x, c, y
};

std::string_view to_string(RoleKind kind);

/// For link roles `a` is the adjacent endpoint and `b` the other one.
struct Role {
  RoleKind kind = RoleKind::vertex;
  std::uint64_t a = 0;
  std::uint64_t b = 0;

  friend bool operator==(const Role&, const Role&) = default;
};

/// Gadget side of an equivalence.
enum class Claim {
  has_component,        // a `query` component of size >= threshold exists
  target_is_component,  // `target` is a `query` component
  not_connected,        // the whole vertex set is not `query`-connected
};

std::string_view to_string(Claim claim);

/// The statement a gadget is built to satisfy: source property <-> `claim`.
struct Equivalence {
  std::string source_format;  // "graph", "bipartite" or "sat"
  std::string source_text;    // source instance in its text format
  std::optional<VertexSet> source_subset;  // X for the 2-club gadgets
  Claim claim = Claim::has_component;
  ComponentQuery query;
  std::size_t threshold = 0;
  std::string iff;
  /// Line gadget only: lifetime asked for, padded with empty snapshots.
  std::optional<Time> requested_lifetime;
  /// 2-club gadgets: the set Y whose maximality is in question.
  std::optional<VertexSet> target;
};

struct GadgetInstance {
  TemporalGraph graph;
  Equivalence equivalence;
  std::vector<Role> roles;  // one per vertex
};

/// Vertices are the edges of H. Edges sharing their X endpoint are joined at
/// time 1, edges sharing their Y endpoint at time 2. With `kind` mutual the
/// record states biclique edges >= k <-> closed tcc >= k; with unilateral,
/// 2K2-free edges >= k <-> closed tucc >= k.
GadgetInstance gadget_linegraph_bipartite(const BipartiteGraph& h, Connectivity kind,
                                          std::size_t k, Time requested_lifetime = 2);

/// Undirected, 2n + 4m vertices, labels 0..4m. k-clique <-> tcc >= 2k (k >= 3).
GadgetInstance gadget_clique_tcc(const SimpleGraph& g, std::size_t k);

/// Directed, n + 2m vertices, lifetime 2. k-clique <-> tcc >= k (k >= 3).
/// The recorded tucc side only holds for k >= 4: u, h_uv, v is a tucc for
/// every edge uv, so the largest tucc is max(omega, 3) once G has an edge.
GadgetInstance gadget_clique_dir_tau2(const SimpleGraph& g, std::size_t k);

/// Directed, 2n vertices, lifetime 3. k-clique <-> closed tcc >= 2k, or
/// closed tucc >= 2k with `unilateral` (one cross arc per edge).
GadgetInstance gadget_clique_closed_dir_tau3(const SimpleGraph& g, bool unilateral,
                                             std::size_t k);

/// Undirected, n + 2m vertices, lifetime 5. Target Y = X u N_H(X).
/// X maximal 2-club <-> Y closed tcc <-> Y closed tucc (non-strict).
GadgetInstance gadget_2club(const SimpleGraph& g, const VertexSet& x);

/// G with every edge at times 1 and 2, target Y = X, strict model.
GadgetInstance gadget_2club_strict(const SimpleGraph& g, const VertexSet& x);

/// Directed, 2^nx + 2^ny + m + 1 vertices, lifetime 8.
/// satisfiable <-> not temporally connected.
GadgetInstance gadget_sat_connected(const SatInstance& phi, std::size_t max_block = 12);

/// Arc times around the hub x in the unilateral SAT gadget.
enum class HubSchedule {
  /// X -> x at 1, x -> X at 2. An assignment can then reach another one
  /// through x and borrow its failure arcs, so satisfiable formulas can
  /// still yield connected gadgets; (x1) over one X and one Y variable is
  /// the smallest example.
  early,
  /// X -> x at 5, x -> X at 2 and 6. x keeps its early route into the
  /// failure arcs, assignments only meet through x after time 4.
  separated,
};

/// Directed, 2^nx + 2^ny + m + 3 vertices, lifetime 7.
/// Intended: satisfiable <-> not temporally unilaterally connected. Holds
/// for HubSchedule::separated only.
GadgetInstance gadget_sat_unilateral(const SatInstance& phi, std::size_t max_block = 12,
                                     HubSchedule schedule = HubSchedule::early);

/// JSON sidecar: {"iff", "query": {"closed", "kind", "model"}, "source",
/// "threshold", ...}, keys sorted, two-space indent, trailing newline.
std::string equivalence_json(const GadgetInstance& gadget);

/// Decides the gadget side of the recorded equivalence with the components
/// module: component of size >= threshold, maximality of the target, or
/// whole-graph connectivity.
bool gadget_side_holds(const GadgetInstance& gadget, const SearchBudget& budget = {});

}  // namespace tempconn
