#include "tempconn/gadgets.hpp"

#include <algorithm>
#include <json.hpp>
#include <string>

#include "tempconn/error.hpp"

namespace tempconn {

std::string_view to_string(RoleKind kind) {
  switch (kind) {
    case RoleKind::edge: return "edge";
    case RoleKind::vertex: return "vertex";
    case RoleKind::copy: return "copy";
    case RoleKind::link: return "link";
    case RoleKind::link_copy: return "link_copy";
    case RoleKind::in: return "in";
    case RoleKind::out: return "out";
    case RoleKind::assignment_x: return "assignment_x";
    case RoleKind::assignment_y: return "assignment_y";
    case RoleKind::clause: return "clause";
    case RoleKind::hub: return "hub";
  }
  return "unknown";
}

std::string_view to_string(Claim claim) {
  switch (claim) {
    case Claim::has_component: return "has_component";
    case Claim::target_is_component: return "target_is_component";
    case Claim::not_connected: return "not_connected";
  }
  return "unknown";
}

namespace {

// Collects vertices (name + role) before the edges are known.
class Layout {
 public:
  Vertex add(std::string name, Role role) {
    names_.push_back(std::move(name));
    roles_.push_back(role);
    return static_cast<Vertex>(names_.size() - 1);
  }
  std::size_t size() const { return names_.size(); }

  GadgetInstance finish(TemporalGraphBuilder&& builder, Equivalence eq) {
    builder.set_names(std::move(names_));
    return GadgetInstance{std::move(builder).build(), std::move(eq), std::move(roles_)};
  }

 private:
  std::vector<std::string> names_;
  std::vector<Role> roles_;
};

std::string vname(Vertex u) { return "v" + std::to_string(u); }

std::string lname(Vertex u, Vertex v) {
  return "h" + std::to_string(u) + "_" + std::to_string(v);
}

Equivalence graph_source(const SimpleGraph& g) {
  Equivalence eq;
  eq.source_format = "graph";
  eq.source_text = format_simple_graph(g);
  return eq;
}

void require_k(std::size_t k, std::size_t least) {
  if (k < least)
    throw InvalidArgument("k must be at least " + std::to_string(least) + " for this gadget");
}

}  // namespace

GadgetInstance gadget_linegraph_bipartite(const BipartiteGraph& h, Connectivity kind,
                                          std::size_t k, Time requested_lifetime) {
  h.validate();
  if (h.edges.empty()) throw InvalidArgument("the bipartite graph has no edges");
  require_k(k, 1);
  if (requested_lifetime < 2) throw InvalidArgument("the line gadget needs lifetime at least 2");
  Layout layout;
  for (auto [x, y] : h.edges)
    layout.add("x" + std::to_string(x + 1) + "y" + std::to_string(y + 1),
               Role{RoleKind::edge, x, y});
  TemporalGraphBuilder b(false, layout.size());
  const auto m = static_cast<Vertex>(h.edges.size());
  for (Vertex i = 0; i < m; ++i) {
    for (Vertex j = i + 1; j < m; ++j) {
      if (h.edges[i].first == h.edges[j].first) b.add(i, j, 1);
      if (h.edges[i].second == h.edges[j].second) b.add(i, j, 2);
    }
  }
  Equivalence eq;
  eq.source_format = "bipartite";
  eq.source_text = format_bipartite(h);
  eq.query = {kind, Closure::closed, Model::non_strict};
  eq.threshold = k;
  eq.requested_lifetime = requested_lifetime;
  eq.iff = kind == Connectivity::mutual
               ? "biclique with >= k edges <-> closed tcc of size >= k"
               : "2K2-free subgraph with >= k edges <-> closed tucc of size >= k";
  return layout.finish(std::move(b), std::move(eq));
}

GadgetInstance gadget_clique_tcc(const SimpleGraph& g, std::size_t k) {
  require_k(k, 3);
  const auto n = static_cast<Vertex>(g.vertex_count());
  const auto m = static_cast<Time>(g.edge_count());
  Layout layout;
  for (Vertex u = 0; u < n; ++u) layout.add(vname(u), Role{RoleKind::vertex, u, 0});
  for (Vertex u = 0; u < n; ++u) layout.add(vname(u) + "'", Role{RoleKind::copy, u, 0});
  std::vector<std::pair<Vertex, Vertex>> h, hc;  // (h_uv, h_vu) per edge
  for (auto [u, v] : g.edges()) {
    Vertex huv = layout.add(lname(u, v), Role{RoleKind::link, u, v});
    h.emplace_back(huv, layout.add(lname(v, u), Role{RoleKind::link, v, u}));
  }
  for (auto [u, v] : g.edges()) {
    Vertex huv = layout.add(lname(u, v) + "'", Role{RoleKind::link_copy, u, v});
    hc.emplace_back(huv, layout.add(lname(v, u) + "'", Role{RoleKind::link_copy, v, u}));
  }

  TemporalGraphBuilder b(false, layout.size());
  for (Vertex u = 0; u < n; ++u) b.add(u, n + u, 0);
  for (Time i = 1; i <= m; ++i) {
    auto [u, v] = g.edges()[i - 1];
    auto [huv, hvu] = h[i - 1];
    auto [huv2, hvu2] = hc[i - 1];
    b.add(u, huv, i).add(v, hvu, i);
    b.add(huv, v, m + i).add(hvu, u, m + i);
    b.add(n + u, huv2, 2 * m + i).add(n + v, hvu2, 2 * m + i);
    b.add(huv2, n + v, 3 * m + i).add(hvu2, n + u, 3 * m + i);
  }
  Equivalence eq = graph_source(g);
  eq.query = {Connectivity::mutual, Closure::open, Model::non_strict};
  eq.threshold = 2 * k;
  eq.iff = "clique of size >= k <-> tcc of size >= 2k";
  return layout.finish(std::move(b), std::move(eq));
}

GadgetInstance gadget_clique_dir_tau2(const SimpleGraph& g, std::size_t k) {
  require_k(k, 3);
  const auto n = static_cast<Vertex>(g.vertex_count());
  Layout layout;
  for (Vertex u = 0; u < n; ++u) layout.add(vname(u), Role{RoleKind::vertex, u, 0});
  std::vector<std::pair<Vertex, Vertex>> h;
  for (auto [u, v] : g.edges()) {
    Vertex huv = layout.add(lname(u, v), Role{RoleKind::link, u, v});
    h.emplace_back(huv, layout.add(lname(v, u), Role{RoleKind::link, v, u}));
  }
  TemporalGraphBuilder b(true, layout.size());
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    auto [u, v] = g.edges()[i];
    auto [huv, hvu] = h[i];
    b.add(u, huv, 1).add(v, hvu, 1);
    b.add(huv, v, 2).add(hvu, u, 2);
  }
  Equivalence eq = graph_source(g);
  eq.query = {Connectivity::mutual, Closure::open, Model::non_strict};
  eq.threshold = k;
  eq.iff = "clique of size >= k <-> tcc of size >= k <-> tucc of size >= k";
  return layout.finish(std::move(b), std::move(eq));
}

GadgetInstance gadget_clique_closed_dir_tau3(const SimpleGraph& g, bool unilateral,
                                             std::size_t k) {
  require_k(k, 1);
  const auto n = static_cast<Vertex>(g.vertex_count());
  Layout layout;
  for (Vertex u = 0; u < n; ++u) {
    layout.add(vname(u) + "in", Role{RoleKind::in, u, 0});
    layout.add(vname(u) + "out", Role{RoleKind::out, u, 0});
  }
  auto in = [](Vertex u) { return 2 * u; };
  auto out = [](Vertex u) { return 2 * u + 1; };
  TemporalGraphBuilder b(true, layout.size());
  for (Vertex u = 0; u < n; ++u) {
    b.add(in(u), out(u), {1, 3});
    b.add(out(u), in(u), {1, 3});
  }
  for (auto [u, v] : g.edges()) {
    b.add(out(u), in(v), 2);
    if (!unilateral) b.add(out(v), in(u), 2);
  }
  Equivalence eq = graph_source(g);
  eq.query = {unilateral ? Connectivity::unilateral : Connectivity::mutual, Closure::closed,
              Model::non_strict};
  eq.threshold = 2 * k;
  eq.iff = unilateral ? "clique of size >= k <-> closed tucc of size >= 2k"
                      : "clique of size >= k <-> closed tcc of size >= 2k";
  return layout.finish(std::move(b), std::move(eq));
}

namespace {

VertexSet checked_subset(const SimpleGraph& g, const VertexSet& x) {
  VertexSet s = make_vertex_set(x);
  if (s.size() != x.size()) throw InvalidArgument("X has repeated vertices");
  for (Vertex v : s)
    if (v >= g.vertex_count()) throw InvalidArgument("X names vertex " + std::to_string(v) +
                                                     " outside the graph");
  return s;
}

}  // namespace

GadgetInstance gadget_2club(const SimpleGraph& g, const VertexSet& x) {
  const VertexSet xs = checked_subset(g, x);
  const auto n = static_cast<Vertex>(g.vertex_count());
  Layout layout;
  for (Vertex u = 0; u < n; ++u) layout.add(vname(u), Role{RoleKind::vertex, u, 0});
  std::vector<char> in_x(n, 0);
  for (Vertex v : xs) in_x[v] = 1;
  VertexSet y = xs;
  std::vector<std::pair<Vertex, Vertex>> h;
  for (auto [u, v] : g.edges()) {
    Vertex huv = layout.add(lname(u, v), Role{RoleKind::link, u, v});
    Vertex hvu = layout.add(lname(v, u), Role{RoleKind::link, v, u});
    h.emplace_back(huv, hvu);
    if (in_x[u]) y.push_back(huv);
    if (in_x[v]) y.push_back(hvu);
  }
  TemporalGraphBuilder b(false, layout.size());
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    auto [u, v] = g.edges()[i];
    auto [huv, hvu] = h[i];
    b.add(u, huv, {1, 3, 5}).add(v, hvu, {1, 3, 5}).add(huv, hvu, {2, 4});
  }
  Equivalence eq = graph_source(g);
  eq.source_subset = xs;
  eq.claim = Claim::target_is_component;
  eq.query = {Connectivity::mutual, Closure::closed, Model::non_strict};
  eq.target = make_vertex_set(std::move(y));
  eq.threshold = eq.target->size();
  eq.iff = "X is a maximal 2-club <-> Y is a closed tcc <-> Y is a closed tucc";
  return layout.finish(std::move(b), std::move(eq));
}

GadgetInstance gadget_2club_strict(const SimpleGraph& g, const VertexSet& x) {
  const VertexSet xs = checked_subset(g, x);
  const auto n = static_cast<Vertex>(g.vertex_count());
  Layout layout;
  for (Vertex u = 0; u < n; ++u) layout.add(vname(u), Role{RoleKind::vertex, u, 0});
  TemporalGraphBuilder b(false, n);
  for (auto [u, v] : g.edges()) b.add(u, v, {1, 2});
  Equivalence eq = graph_source(g);
  eq.source_subset = xs;
  eq.claim = Claim::target_is_component;
  eq.query = {Connectivity::mutual, Closure::closed, Model::strict};
  eq.target = xs;
  eq.threshold = xs.size();
  eq.iff = "X is a maximal 2-club <-> X is a closed tcc <-> X is a closed tucc (strict)";
  return layout.finish(std::move(b), std::move(eq));
}

namespace {

std::string assignment_name(char side, std::uint64_t bits, std::size_t width) {
  std::string s(1, side);
  for (std::size_t i = 0; i < width; ++i) s += ((bits >> i) & 1U) ? 'T' : 'F';
  return s;
}

struct SatBlocks {
  std::vector<Vertex> xs, cs, ys;
};

SatBlocks lay_out_sat(const SatInstance& phi, std::size_t max_block, Layout& layout) {
  phi.validate();
  if (phi.nx == 0 || phi.ny == 0)
    throw InvalidArgument("both variable blocks need at least one variable");
  if (phi.nx > max_block || phi.ny > max_block)
    throw InvalidArgument("variable block larger than the configured bound of " +
                          std::to_string(max_block));
  SatBlocks blocks;
  for (std::uint64_t a = 0; a < (std::uint64_t{1} << phi.nx); ++a)
    blocks.xs.push_back(layout.add(assignment_name('x', a, phi.nx), Role{RoleKind::assignment_x, a, 0}));
  for (std::size_t i = 0; i < phi.clauses.size(); ++i)
    blocks.cs.push_back(layout.add("c" + std::to_string(i + 1), Role{RoleKind::clause, i, 0}));
  for (std::uint64_t a = 0; a < (std::uint64_t{1} << phi.ny); ++a)
    blocks.ys.push_back(layout.add(assignment_name('y', a, phi.ny), Role{RoleKind::assignment_y, a, 0}));
  return blocks;
}

// f -> c_i at 4 for X assignments failing c_i; c_i -> f at 5 for Y ones.
void add_failure_arcs(const SatInstance& phi, const SatBlocks& blocks, TemporalGraphBuilder& b) {
  for (std::size_t i = 0; i < phi.clauses.size(); ++i) {
    for (std::size_t a = 0; a < blocks.xs.size(); ++a)
      if (side_fails_clause(phi.clauses[i], Side::x, a)) b.add(blocks.xs[a], blocks.cs[i], 4);
    for (std::size_t a = 0; a < blocks.ys.size(); ++a)
      if (side_fails_clause(phi.clauses[i], Side::y, a)) b.add(blocks.cs[i], blocks.ys[a], 5);
  }
}

Equivalence sat_source(const SatInstance& phi) {
  Equivalence eq;
  eq.source_format = "sat";
  eq.source_text = format_sat(phi);
  eq.claim = Claim::not_connected;
  return eq;
}

}  // namespace

GadgetInstance gadget_sat_connected(const SatInstance& phi, std::size_t max_block) {
  Layout layout;
  SatBlocks blocks = lay_out_sat(phi, max_block, layout);
  const Vertex s = layout.add("s", Role{RoleKind::hub, 0, 0});
  TemporalGraphBuilder b(true, layout.size());
  for (Vertex f : blocks.xs) {
    b.add(s, f, 7).add(f, s, 6);
    for (Vertex c : blocks.cs) b.add(f, c, 8).add(c, f, 5);
  }
  for (Vertex f : blocks.ys) {
    b.add(s, f, 1);
    for (Vertex c : blocks.cs) b.add(c, f, 3).add(f, c, 2);
  }
  add_failure_arcs(phi, blocks, b);
  Equivalence eq = sat_source(phi);
  eq.query = {Connectivity::mutual, Closure::open, Model::non_strict};
  eq.threshold = layout.size();
  eq.iff = "satisfiable <-> not temporally connected";
  return layout.finish(std::move(b), std::move(eq));
}

GadgetInstance gadget_sat_unilateral(const SatInstance& phi, std::size_t max_block,
                                     HubSchedule schedule) {
  Layout layout;
  SatBlocks blocks = lay_out_sat(phi, max_block, layout);
  const Vertex hx = layout.add("x", Role{RoleKind::hub, 0, 0});
  const Vertex hc = layout.add("c", Role{RoleKind::hub, 1, 0});
  const Vertex hy = layout.add("y", Role{RoleKind::hub, 2, 0});
  TemporalGraphBuilder b(true, layout.size());
  auto spokes = [&](const std::vector<Vertex>& block, Vertex hub) {
    for (Vertex z : block) b.add(z, hub, 1).add(hub, z, 2);
  };
  if (schedule == HubSchedule::early) {
    spokes(blocks.xs, hx);
  } else {
    for (Vertex f : blocks.xs) b.add(f, hx, 5).add(hx, f, 2).add(hx, f, 6);
  }
  spokes(blocks.cs, hc);
  spokes(blocks.ys, hy);
  for (Vertex c : blocks.cs) b.add(hx, c, 6);
  for (Vertex f : blocks.ys) b.add(hc, f, 6);
  b.add(hx, hc, 7).add(hx, hy, 7).add(hc, hy, 7);
  add_failure_arcs(phi, blocks, b);
  Equivalence eq = sat_source(phi);
  eq.query = {Connectivity::unilateral, Closure::open, Model::non_strict};
  eq.threshold = layout.size();
  eq.iff = "satisfiable <-> not temporally unilaterally connected";
  return layout.finish(std::move(b), std::move(eq));
}

namespace {

nlohmann::json source_json(const Equivalence& eq) {
  nlohmann::json src;
  src["format"] = eq.source_format;
  if (eq.source_format == "graph") {
    SimpleGraph g = parse_simple_graph(eq.source_text);
    src["n"] = g.vertex_count();
    src["edges"] = nlohmann::json::array();
    for (auto [u, v] : g.edges()) src["edges"].push_back({u, v});
  } else if (eq.source_format == "bipartite") {
    BipartiteGraph h = parse_bipartite(eq.source_text);
    src["left"] = h.left;
    src["right"] = h.right;
    src["edges"] = nlohmann::json::array();
    for (auto [x, y] : h.edges) src["edges"].push_back({x, y});
  } else {
    SatInstance phi = parse_sat(eq.source_text);
    src["nx"] = phi.nx;
    src["ny"] = phi.ny;
    src["clauses"] = nlohmann::json::array();
    for (const auto& clause : phi.clauses) {
      nlohmann::json lits = nlohmann::json::array();
      for (const auto& lit : clause) lits.push_back(to_string(lit));
      src["clauses"].push_back(lits);
    }
  }
  if (eq.source_subset) src["subset"] = *eq.source_subset;
  return src;
}

}  // namespace

std::string equivalence_json(const GadgetInstance& gadget) {
  const Equivalence& eq = gadget.equivalence;
  nlohmann::json j;
  j["source"] = source_json(eq);
  j["query"] = {{"kind", eq.query.kind == Connectivity::mutual ? "tcc" : "tucc"},
                {"closed", eq.query.closure == Closure::closed},
                {"model", std::string(to_string(eq.query.model))}};
  j["threshold"] = eq.threshold;
  j["iff"] = eq.iff;
  j["claim"] = std::string(to_string(eq.claim));
  if (eq.requested_lifetime) j["requested_lifetime"] = *eq.requested_lifetime;
  if (eq.target) {
    nlohmann::json names = nlohmann::json::array();
    for (Vertex v : *eq.target) names.push_back(gadget.graph.vertex_label(v));
    j["target"] = names;
  }
  return j.dump(2) + "\n";
}

bool gadget_side_holds(const GadgetInstance& gadget, const SearchBudget& budget) {
  const Equivalence& eq = gadget.equivalence;
  switch (eq.claim) {
    case Claim::has_component:
      return has_component_of_size(gadget.graph, eq.query, eq.threshold, Algorithm::automatic,
                                   budget)
          .has_value();
    case Claim::target_is_component:
      return is_maximal_component(gadget.graph, *eq.target, eq.query, budget);
    case Claim::not_connected:
      return !is_temporally_connected(gadget.graph, eq.query.kind, eq.query.model);
  }
  return false;
}

}  // namespace tempconn
