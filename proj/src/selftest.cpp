#include "tempconn/selftest.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "tempconn/components.hpp"
#include "tempconn/fpt.hpp"
#include "tempconn/gadgets.hpp"
#include "tempconn/oracle.hpp"
#include "tempconn/random.hpp"
#include "tempconn/reachability.hpp"
#include "tempconn/text_format.hpp"

namespace tempconn {

bool SelftestReport::passed() const {
  return std::all_of(suites.begin(), suites.end(),
                     [](const SuiteResult& s) { return s.failures == 0; });
}

TemporalGraph minimize_counterexample(const TemporalGraph& g,
                                      const std::function<bool(const TemporalGraph&)>& still_fails) {
  TemporalGraph best = g;
  bool shrunk = true;
  while (shrunk) {
    shrunk = false;
    for (std::size_t drop = best.vertex_count(); drop-- > 0 && best.vertex_count() > 1;) {
      VertexSet keep;
      for (Vertex v = 0; v < best.vertex_count(); ++v)
        if (v != drop) keep.push_back(v);
      TemporalGraph smaller = induced_subgraph(best, keep);
      if (still_fails(smaller)) {
        best = std::move(smaller);
        shrunk = true;
        break;
      }
    }
    if (shrunk) continue;
    for (std::size_t e = 0; e < best.edges().size() && !shrunk; ++e) {
      for (std::size_t l = 0; l < best.edges()[e].labels.size() && !shrunk; ++l) {
        auto edges = best.edges();
        edges[e].labels.erase(edges[e].labels.begin() + static_cast<std::ptrdiff_t>(l));
        if (edges[e].labels.empty()) edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(e));
        TemporalGraph smaller(best.directed(), best.vertex_count(), std::move(edges), best.names());
        if (still_fails(smaller)) {
          best = std::move(smaller);
          shrunk = true;
        }
      }
    }
  }
  return best;
}

namespace {

using Check = std::function<std::optional<std::string>(const TemporalGraph&)>;

struct Failure {
  TemporalGraph graph;
  std::string query;
  std::string message;
  bool minimize = true;
  Check check;
};

const ComponentQuery kAllQueries[] = {
    {Connectivity::mutual, Closure::open, Model::non_strict},
    {Connectivity::unilateral, Closure::open, Model::non_strict},
    {Connectivity::mutual, Closure::closed, Model::non_strict},
    {Connectivity::unilateral, Closure::closed, Model::non_strict},
    {Connectivity::mutual, Closure::open, Model::strict},
    {Connectivity::unilateral, Closure::open, Model::strict},
    {Connectivity::mutual, Closure::closed, Model::strict},
    {Connectivity::unilateral, Closure::closed, Model::strict},
};

std::string query_flags(const ComponentQuery& q) {
  std::string s = q.kind == Connectivity::mutual ? "--kind tcc" : "--kind tucc";
  if (q.closure == Closure::closed) s += " --closed";
  s += " --model ";
  s += to_string(q.model);
  return s;
}

std::optional<std::string> check_reachability(const TemporalGraph& g, Model m, bool inject) {
  const auto fast = reachability_digraph(g, m);
  const auto slow = oracle_reach_matrix(g, m);
  const std::size_t n = g.vertex_count();
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u == v) continue;
      bool claimed = fast.has_arc(u, v);
      if (inject && u == 0 && v + 1 == n) claimed = !claimed;
      if (claimed != (slow[u][v] != 0))
        return "reaches(" + g.vertex_label(u) + ", " + g.vertex_label(v) + ") disagrees";
    }
  }
  TimeExpandedGraph te(g, m);
  for (Vertex u = 0; u < n; ++u) {
    const auto profile = reach_profile(g, u, m);
    for (Time i = 0; i <= g.lifetime(); ++i) {
      auto expected = te.reachable(u, i);
      VertexSet want;
      for (Vertex v = 0; v < n; ++v)
        if (expected[v]) want.push_back(v);
      if (profile.at(i) != want)
        return "reach profile of " + g.vertex_label(u) + " differs at time " + std::to_string(i);
    }
  }
  return std::nullopt;
}

std::optional<std::string> check_components(const TemporalGraph& g, const ComponentQuery& q) {
  auto fast = enumerate_components(g, q);
  auto slow = oracle_enumerate_components(g, q);
  if (fast.components != slow.components) return component_name(q) + " enumeration differs";
  return std::nullopt;
}

std::optional<std::string> check_fpt(const TemporalGraph& g, const ComponentQuery& q,
                                     std::size_t k) {
  FptStats stats;
  auto witness = fpt_find(g, q, k, &stats);
  bool expected = oracle_max_component_size(g, q) >= k;
  std::string tag = component_name(q) + " with k=" + std::to_string(k);
  if (witness.has_value() != expected) return "fpt answer differs for " + tag;
  if (witness && (witness->size() < k || !is_connected_set(g, *witness, q)))
    return "fpt witness invalid for " + tag;
  if (!stats.trivial && stats.max_neighborhood > stats.cap)
    return "degree cap exceeded for " + tag;
  return std::nullopt;
}

class Runner {
 public:
  Runner(const SelftestOptions& options, std::ostream& log) : options_(options), log_(log) {}

  void suite(const std::string& name, std::uint64_t salt,
             const std::function<std::optional<Failure>(Rng&, std::size_t)>& trial) {
    SuiteResult result{name, options_.trials, 0, {}};
    Rng rng(options_.seed * 0x9E3779B97F4A7C15ULL + salt);
    for (std::size_t t = 0; t < options_.trials; ++t) {
      auto failure = trial(rng, t);
      if (!failure) continue;
      if (result.failures++ == 0) {
        result.first_failure = failure->message;
        if (report_.counterexample.empty()) dump(*failure);
      }
    }
    log_ << name << ": " << result.trials << " trials, " << result.failures << " failures\n";
    if (result.failures > 0) log_ << "  first failure: " << result.first_failure << '\n';
    report_.suites.push_back(std::move(result));
  }

  SelftestReport finish() {
    if (report_.passed()) {
      log_ << "all suites passed\n";
    } else {
      log_ << "FAILED\n";
      if (!report_.counterexample.empty()) log_ << "counterexample: " << report_.counterexample << '\n';
    }
    return report_;
  }

 private:
  void dump(const Failure& f) {
    TemporalGraph g = f.graph;
    if (f.minimize && f.check)
      g = minimize_counterexample(g, [&](const TemporalGraph& h) { return f.check(h).has_value(); });
    const std::string path = options_.dump_prefix + ".tg";
    std::ofstream(path) << serialize_temporal_graph(g);
    std::ofstream(options_.dump_prefix + ".txt")
        << "query: " << f.query << "\nfailure: " << f.message << '\n';
    report_.counterexample = path;
  }

  const SelftestOptions& options_;
  std::ostream& log_;
  SelftestReport report_;
};

std::optional<Failure> failure_from(const TemporalGraph& g, std::string query, Check check) {
  auto message = check(g);
  if (!message) return std::nullopt;
  return Failure{g, std::move(query), *message, true, std::move(check)};
}

std::optional<Failure> gadget_failure(const GadgetInstance& gadget, bool expected,
                                      const std::string& label) {
  if (gadget_side_holds(gadget) == expected) return std::nullopt;
  return Failure{gadget.graph, gadget.equivalence.iff,
                 label + ": source side " + (expected ? "holds" : "fails") +
                     " but the gadget side does not agree",
                 false, {}};
}

std::optional<Failure> gadget_trial(Rng& rng, std::size_t trial, std::size_t max_n) {
  const std::size_t graph_n = rng.between(1, std::max<std::size_t>(1, std::min<std::size_t>(max_n, 5)));
  switch (trial % 7) {
    case 0: {
      BipartiteGraph h;
      do h = random_bipartite(rng, rng.between(1, 3), rng.between(1, 3), 60);
      while (h.edges.empty());
      const std::size_t k = rng.between(1, h.edges.size());
      bool mutual = rng.percent(50);
      auto gadget = gadget_linegraph_bipartite(
          h, mutual ? Connectivity::mutual : Connectivity::unilateral, k);
      bool source = mutual ? oracle_biclique_edges(h) >= k : oracle_2k2free_edges(h) >= k;
      return gadget_failure(gadget, source, "line-bipartite");
    }
    case 1: {
      SimpleGraph g = random_simple_graph(rng, graph_n, 60);
      const std::size_t k = rng.between(3, 5);
      return gadget_failure(gadget_clique_tcc(g, k), oracle_max_clique(g) >= k, "clique-tcc");
    }
    case 2: {
      SimpleGraph g = random_simple_graph(rng, graph_n, 60);
      const std::size_t k = rng.between(3, 5);
      auto gadget = gadget_clique_dir_tau2(g, k);
      std::size_t largest = oracle_max_clique(g);
      if (rng.percent(50)) {
        gadget.equivalence.query.kind = Connectivity::unilateral;
        // u, h_uv, v is unilaterally connected for every edge uv
        if (g.edge_count() > 0) largest = std::max<std::size_t>(largest, 3);
      }
      return gadget_failure(gadget, largest >= k, "dir-tau2");
    }
    case 3: {
      SimpleGraph g = random_simple_graph(rng, graph_n, 60);
      const std::size_t k = rng.between(1, graph_n);
      auto gadget = gadget_clique_closed_dir_tau3(g, rng.percent(50), k);
      return gadget_failure(gadget, oracle_max_clique(g) >= k, "closed-dir-tau3");
    }
    case 4: {
      SimpleGraph g = random_simple_graph(rng, graph_n, 50);
      VertexSet x;
      for (Vertex v = 0; v < graph_n; ++v)
        if (rng.percent(60)) x.push_back(v);
      bool strict = rng.percent(50);
      auto gadget = strict ? gadget_2club_strict(g, x) : gadget_2club(g, x);
      if (rng.percent(50)) gadget.equivalence.query.kind = Connectivity::unilateral;
      return gadget_failure(gadget, oracle_is_maximal_2club(g, x), "two-club");
    }
    default: {
      const std::size_t n = rng.between(1, 2);
      SatInstance phi = random_sat(rng, n, n, rng.between(1, 4));
      bool connected = trial % 7 == 5;
      auto gadget = connected ? gadget_sat_connected(phi)
                              : gadget_sat_unilateral(phi, 12, HubSchedule::separated);
      return gadget_failure(gadget, oracle_sat(phi), connected ? "sat-conn" : "sat-uni-separated");
    }
  }
}

}  // namespace

SelftestReport run_selftest(const SelftestOptions& options, std::ostream& log) {
  Runner runner(options, log);
  const std::size_t max_n = std::max<std::size_t>(options.max_n, 1);

  runner.suite("reachability", 1, [&](Rng& rng, std::size_t t) {
    RandomGraphSpec spec;
    spec.vertices = rng.between(1, std::min<std::size_t>(max_n, 12));
    spec.directed = rng.percent(50);
    spec.max_label = static_cast<Time>(rng.between(1, 6));
    spec.density = static_cast<unsigned>(rng.between(10, 60));
    spec.allow_zero = rng.percent(20);
    // The injected flip needs two vertices to act on.
    bool inject = options.inject_failure && t == 0;
    if (inject) spec.vertices = std::max<std::size_t>(spec.vertices, 2);
    TemporalGraph g = random_temporal_graph(rng, spec);
    Model m = rng.percent(50) ? Model::strict : Model::non_strict;
    return failure_from(g, "reach --model " + std::string(to_string(m)),
                        [m, inject](const TemporalGraph& h) {
                          return check_reachability(h, m, inject);
                        });
  });

  runner.suite("components", 2, [&](Rng& rng, std::size_t) -> std::optional<Failure> {
    RandomGraphSpec spec;
    spec.vertices = rng.between(1, std::min<std::size_t>(max_n, 9));
    spec.directed = rng.percent(50);
    spec.max_label = static_cast<Time>(rng.between(1, 4));
    spec.density = static_cast<unsigned>(rng.between(15, 60));
    TemporalGraph g = random_temporal_graph(rng, spec);
    for (const auto& q : kAllQueries) {
      auto f = failure_from(g, "components " + query_flags(q),
                            [q](const TemporalGraph& h) { return check_components(h, q); });
      if (f) return f;
    }
    return std::nullopt;
  });

  runner.suite("fpt", 3, [&](Rng& rng, std::size_t) -> std::optional<Failure> {
    RandomGraphSpec spec;
    spec.vertices = rng.between(1, std::min<std::size_t>(max_n, 12));
    spec.max_label = static_cast<Time>(rng.between(1, 3));
    spec.density = static_cast<unsigned>(rng.between(5, 40));
    TemporalGraph g = random_temporal_graph(rng, spec);
    for (const auto& q : kAllQueries) {
      if (q.model == Model::strict) continue;
      for (std::size_t k = 2; k <= 4; ++k) {
        auto f = failure_from(g, "find --k " + std::to_string(k) + " --algo fpt " + query_flags(q),
                              [q, k](const TemporalGraph& h) { return check_fpt(h, q, k); });
        if (f) return f;
      }
    }
    return std::nullopt;
  });

  runner.suite("gadgets", 4,
               [&](Rng& rng, std::size_t t) { return gadget_trial(rng, t, max_n); });

  return runner.finish();
}

}  // namespace tempconn
