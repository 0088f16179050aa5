#include "tempconn/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <istream>
#include <iterator>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "tempconn/components.hpp"
#include "tempconn/error.hpp"
#include "tempconn/gadgets.hpp"
#include "tempconn/instances.hpp"
#include "tempconn/random.hpp"
#include "tempconn/reachability.hpp"
#include "tempconn/selftest.hpp"
#include "tempconn/text_format.hpp"

namespace tempconn {

namespace {

using nlohmann::json;

constexpr int kYes = 0;
constexpr int kNo = 1;
constexpr int kError = 2;

struct Common {
  std::string input;
  std::string model = "nonstrict";
  std::string format = "text";
  std::string kind = "tcc";
  bool closed = false;
  unsigned threads = 1;
  std::size_t max_cliques = SearchBudget{}.max_cliques;
  std::size_t max_subsets = SearchBudget{}.max_subsets;

  Model parsed_model() const { return model == "strict" ? Model::strict : Model::non_strict; }
  bool as_json() const { return format == "json"; }
  ComponentQuery query() const {
    return {kind == "tcc" ? Connectivity::mutual : Connectivity::unilateral,
            closed ? Closure::closed : Closure::open, parsed_model()};
  }
  SearchBudget budget() const { return {max_cliques, max_subsets, threads}; }
};

void add_graph_options(CLI::App* cmd, Common& c) {
  cmd->add_option("--input", c.input, "Temporal graph file, '-' for standard input")->required();
  cmd->add_option("--model", c.model, "Walk model")
      ->check(CLI::IsMember({"strict", "nonstrict"}))
      ->capture_default_str();
  cmd->add_option("--format", c.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  cmd->add_option("--threads", c.threads, "Worker threads")
      ->check(CLI::Range(1U, 256U))
      ->capture_default_str();
}

void add_query_options(CLI::App* cmd, Common& c) {
  cmd->add_option("--kind", c.kind, "Component kind")
      ->check(CLI::IsMember({"tcc", "tucc"}))
      ->capture_default_str();
  cmd->add_flag("--closed", c.closed, "Closed variant: walks stay inside the set");
  cmd->add_option("--max-cliques", c.max_cliques, "Maximal clique budget")->capture_default_str();
  cmd->add_option("--max-subsets", c.max_subsets, "Closed-search subset budget")
      ->capture_default_str();
}

TemporalGraph load_graph(const std::string& path, std::istream& in) {
  if (path == "-") return parse_temporal_graph(in);
  return read_temporal_graph_file(path);
}

std::vector<std::string> labels(const TemporalGraph& g, const VertexSet& s) {
  std::vector<std::string> out;
  for (Vertex v : s) out.push_back(g.vertex_label(v));
  return out;
}

std::string joined(const std::vector<std::string>& words) {
  std::string out;
  for (std::size_t i = 0; i < words.size(); ++i) out += (i ? " " : "") + words[i];
  return out;
}

Vertex lookup(const TemporalGraph& g, const std::string& name) {
  auto v = g.find_vertex(name);
  if (!v) throw InvalidArgument("unknown vertex '" + name + "'");
  return *v;
}

json query_json(const ComponentQuery& q) {
  return {{"kind", q.kind == Connectivity::mutual ? "tcc" : "tucc"},
          {"closed", q.closure == Closure::closed},
          {"model", std::string(to_string(q.model))}};
}

void print_json(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

int answer(std::ostream& out, bool yes) {
  out << (yes ? "yes" : "no") << '\n';
  return yes ? kYes : kNo;
}

// reach ---------------------------------------------------------------------

struct ReachArgs {
  Common common;
  std::string from;
  std::optional<std::string> to;
  bool profile = false;
};

int cmd_reach(const ReachArgs& a, std::istream& in, std::ostream& out) {
  const TemporalGraph g = load_graph(a.common.input, in);
  const Model m = a.common.parsed_model();
  const Vertex u = lookup(g, a.from);
  if (a.to) {
    const Vertex v = lookup(g, *a.to);
    const bool yes = reaches(g, u, v, m);
    if (a.common.as_json()) {
      print_json(out, {{"from", a.from}, {"to", *a.to}, {"reaches", yes}});
      return yes ? kYes : kNo;
    }
    return answer(out, yes);
  }
  const ReachProfile profile = reach_profile(g, u, m);
  if (a.profile) {
    const auto sets = profile.dense(g.lifetime());
    if (a.common.as_json()) {
      json steps = json::array();
      for (std::size_t i = 0; i < sets.size(); ++i)
        steps.push_back({{"time", i}, {"reachable", labels(g, sets[i])}});
      print_json(out, {{"from", a.from}, {"profile", steps}});
    } else {
      for (std::size_t i = 0; i < sets.size(); ++i)
        out << i << ": " << joined(labels(g, sets[i])) << '\n';
    }
    return kYes;
  }
  if (a.common.as_json())
    print_json(out, {{"from", a.from}, {"reachable", labels(g, profile.final_set())}});
  else
    out << joined(labels(g, profile.final_set())) << '\n';
  return kYes;
}

// components ------------------------------------------------------------------

int cmd_components(const Common& c, std::istream& in, std::ostream& out) {
  const TemporalGraph g = load_graph(c.input, in);
  const ComponentQuery q = c.query();
  const ComponentReport report = enumerate_components(g, q, c.budget());
  if (c.as_json()) {
    json comps = json::array();
    for (const auto& s : report.components) comps.push_back(labels(g, s));
    print_json(out, {{"query", query_json(q)}, {"components", comps},
                     {"max_size", report.max_size()}});
  } else {
    out << "# " << report.count() << ' ' << component_name(q) << " (" << to_string(q.model)
        << "), max size " << report.max_size() << '\n';
    for (const auto& s : report.components) out << joined(labels(g, s)) << '\n';
  }
  return kYes;
}

// check -----------------------------------------------------------------------

struct CheckArgs {
  Common common;
  std::string set;
  bool maximal = false;
};

int cmd_check(const CheckArgs& a, std::istream& in, std::ostream& out) {
  const TemporalGraph g = load_graph(a.common.input, in);
  std::vector<Vertex> members;
  std::stringstream ss(a.set);
  std::string name;
  while (std::getline(ss, name, ','))
    if (!name.empty()) members.push_back(lookup(g, name));
  const VertexSet s = make_vertex_set(std::move(members));
  const ComponentQuery q = a.common.query();
  const bool yes = a.maximal ? is_maximal_component(g, s, q, a.common.budget())
                             : is_connected_set(g, s, q);
  if (a.common.as_json()) {
    print_json(out, {{"query", query_json(q)}, {"set", labels(g, s)}, {"maximal", a.maximal},
                     {"holds", yes}});
    return yes ? kYes : kNo;
  }
  return answer(out, yes);
}

// find ------------------------------------------------------------------------

struct FindArgs {
  Common common;
  std::size_t k = 1;
  std::string algo = "auto";
};

int cmd_find(const FindArgs& a, std::istream& in, std::ostream& out) {
  const TemporalGraph g = load_graph(a.common.input, in);
  const ComponentQuery q = a.common.query();
  const Algorithm algo = a.algo == "fpt"     ? Algorithm::fpt
                         : a.algo == "brute" ? Algorithm::brute
                                             : Algorithm::automatic;
  const auto witness = has_component_of_size(g, q, a.k, algo, a.common.budget());
  if (a.common.as_json()) {
    json w = witness ? json(labels(g, *witness)) : json(nullptr);
    print_json(out, {{"query", query_json(q)}, {"k", a.k}, {"witness", w}});
  } else {
    out << (witness ? joined(labels(g, *witness)) : "none") << '\n';
  }
  return witness ? kYes : kNo;
}

// gen -------------------------------------------------------------------------

struct GenArgs {
  std::string generator;
  std::string input;
  std::string output;
  std::uint64_t seed = 1;
  bool random = false;
  std::size_t n = 4;
  unsigned density = 50;
  std::size_t left = 3;
  std::size_t right = 3;
  std::size_t nx = 2;
  std::size_t ny = 2;
  std::size_t clauses = 3;
  std::size_t k = 0;
  bool unilateral = false;
  bool strict = false;
  std::string subset;
  Time lifetime = 2;
  std::string schedule = "early";
};

std::string source_text(const GenArgs& a, std::istream& in) {
  if (a.input.empty()) return {};
  return a.input == "-" ? std::string(std::istreambuf_iterator<char>(in), {})
                        : read_text_file(a.input);
}

SimpleGraph graph_source(const GenArgs& a, const std::string& text, Rng& rng) {
  return text.empty() ? random_simple_graph(rng, a.n, a.density) : parse_simple_graph(text);
}

VertexSet subset_for(const GenArgs& a, const SimpleGraph& g, Rng& rng) {
  VertexSet x;
  if (a.subset.empty()) {
    for (Vertex v = 0; v < g.vertex_count(); ++v)
      if (rng.percent(50)) x.push_back(v);
    return x;
  }
  std::stringstream ss(a.subset);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      x.push_back(static_cast<Vertex>(std::stoul(tok)));
    } catch (const std::exception&) {
      throw InvalidArgument("malformed vertex '" + tok + "' in --subset");
    }
  }
  return make_vertex_set(std::move(x));
}

GadgetInstance build_gadget(const GenArgs& a, const std::string& text) {
  Rng rng(a.seed);
  const std::string& gen = a.generator;
  if (gen == "line-bipartite") {
    BipartiteGraph h = text.empty() ? random_bipartite(rng, a.left, a.right, a.density)
                                    : parse_bipartite(text);
    return gadget_linegraph_bipartite(h, a.unilateral ? Connectivity::unilateral : Connectivity::mutual,
                                      a.k == 0 ? 2 : a.k, a.lifetime);
  }
  if (gen == "sat-conn" || gen == "sat-uni") {
    SatInstance phi = text.empty() ? random_sat(rng, a.nx, a.ny, a.clauses) : parse_sat(text);
    if (gen == "sat-conn") return gadget_sat_connected(phi);
    return gadget_sat_unilateral(phi, 12,
                                 a.schedule == "separated" ? HubSchedule::separated
                                                           : HubSchedule::early);
  }
  SimpleGraph g = graph_source(a, text, rng);
  const std::size_t k = a.k == 0 ? 3 : a.k;
  if (gen == "clique-tcc") return gadget_clique_tcc(g, k);
  if (gen == "dir-tau2") return gadget_clique_dir_tau2(g, k);
  if (gen == "closed-dir-tau3") return gadget_clique_closed_dir_tau3(g, a.unilateral, k);
  VertexSet x = subset_for(a, g, rng);
  return a.strict ? gadget_2club_strict(g, x) : gadget_2club(g, x);
}

int cmd_gen(const GenArgs& a, std::istream& in, std::ostream& out) {
  const GadgetInstance gadget = build_gadget(a, source_text(a, in));
  const TemporalGraph& g = gadget.graph;
  if (a.output.empty()) {
    serialize_temporal_graph(g, out);
    return kYes;
  }
  const std::string tg = a.output + ".tg", sidecar = a.output + ".json";
  std::ofstream(tg) << serialize_temporal_graph(g);
  std::ofstream(sidecar) << equivalence_json(gadget);
  out << "wrote " << tg << " and " << sidecar << ": " << g.vertex_count() << " vertices, lifetime "
      << g.lifetime() << ", " << g.temporal_edge_count() << " temporal edges\n";
  return kYes;
}

// selftest --------------------------------------------------------------------

int cmd_selftest(const SelftestOptions& options, std::ostream& out) {
  return run_selftest(options, out).passed() ? kYes : kNo;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Connectivity analysis for temporal graphs", "tempconn"};
  app.require_subcommand(1);

  ReachArgs reach;
  auto* reach_cmd = app.add_subcommand("reach", "Temporal reachability from one vertex");
  add_graph_options(reach_cmd, reach.common);
  reach_cmd->add_option("--from", reach.from, "Source vertex")->required();
  reach_cmd->add_option("--to", reach.to, "Target vertex; answers yes or no");
  reach_cmd->add_flag("--profile", reach.profile, "Reachable set after every timestep");

  Common comp;
  auto* comp_cmd = app.add_subcommand("components", "Enumerate components");
  add_graph_options(comp_cmd, comp);
  add_query_options(comp_cmd, comp);

  CheckArgs check;
  auto* check_cmd = app.add_subcommand("check", "Test a vertex set");
  add_graph_options(check_cmd, check.common);
  add_query_options(check_cmd, check.common);
  check_cmd->add_option("--set", check.set, "Comma-separated vertex names")->required();
  check_cmd->add_flag("--maximal", check.maximal, "Require the set to be a component");

  FindArgs find;
  auto* find_cmd = app.add_subcommand("find", "Find a connected set of at least k vertices");
  add_graph_options(find_cmd, find.common);
  add_query_options(find_cmd, find.common);
  find_cmd->add_option("--k", find.k, "Minimum size")->required()->check(CLI::PositiveNumber);
  find_cmd->add_option("--algo", find.algo, "Search algorithm")
      ->check(CLI::IsMember({"auto", "fpt", "brute"}))
      ->capture_default_str();

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a reduction gadget");
  gen_cmd->add_option("generator", gen.generator, "Gadget to build")
      ->required()
      ->check(CLI::IsMember({"line-bipartite", "clique-tcc", "dir-tau2", "closed-dir-tau3",
                             "two-club", "sat-conn", "sat-uni"}));
  gen_cmd->add_option("--input", gen.input, "Source instance file; random when omitted");
  gen_cmd->add_flag("--random", gen.random, "Draw a random source instance (the default)");
  gen_cmd->add_option("--seed", gen.seed, "Seed for random sources")->capture_default_str();
  gen_cmd->add_option("--output", gen.output, "Write <prefix>.tg and <prefix>.json");
  gen_cmd->add_option("--n", gen.n, "Random graph: vertices")->capture_default_str();
  gen_cmd->add_option("--density", gen.density, "Random sources: edge percentage")
      ->check(CLI::Range(0U, 100U))
      ->capture_default_str();
  gen_cmd->add_option("--left", gen.left, "Random bipartite graph: |X|")->capture_default_str();
  gen_cmd->add_option("--right", gen.right, "Random bipartite graph: |Y|")->capture_default_str();
  gen_cmd->add_option("--nx", gen.nx, "Random formula: X variables")->capture_default_str();
  gen_cmd->add_option("--ny", gen.ny, "Random formula: Y variables")->capture_default_str();
  gen_cmd->add_option("--clauses", gen.clauses, "Random formula: clauses")->capture_default_str();
  gen_cmd->add_option("--k", gen.k, "Size parameter recorded in the equivalence");
  gen_cmd->add_flag("--unilateral", gen.unilateral,
                    "closed-dir-tau3 and line-bipartite: unilateral variant");
  gen_cmd->add_flag("--strict", gen.strict, "two-club: strict-model variant");
  gen_cmd->add_option("--subset", gen.subset, "two-club: comma-separated vertex indices of X");
  gen_cmd->add_option("--lifetime", gen.lifetime, "line-bipartite: requested lifetime")
      ->capture_default_str();
  gen_cmd->add_option("--schedule", gen.schedule, "sat-uni: arc times around the hub x")
      ->check(CLI::IsMember({"early", "separated"}))
      ->capture_default_str();

  SelftestOptions selftest;
  auto* self_cmd = app.add_subcommand("selftest", "Randomized comparison against the oracles");
  self_cmd->add_option("--trials", selftest.trials, "Trials per suite")->capture_default_str();
  self_cmd->add_option("--max-n", selftest.max_n, "Largest random graph")->capture_default_str();
  self_cmd->add_option("--seed", selftest.seed, "Random seed")->capture_default_str();
  self_cmd->add_option("--dump", selftest.dump_prefix, "Counterexample file prefix")
      ->capture_default_str();
  self_cmd->add_flag("--inject-failure", selftest.inject_failure)->group("");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kError;
  }

  try {
    if (reach_cmd->parsed()) return cmd_reach(reach, in, out);
    if (comp_cmd->parsed()) return cmd_components(comp, in, out);
    if (check_cmd->parsed()) return cmd_check(check, in, out);
    if (find_cmd->parsed()) return cmd_find(find, in, out);
    if (gen_cmd->parsed()) return cmd_gen(gen, in, out);
    if (self_cmd->parsed()) return cmd_selftest(selftest, out);
  } catch (const ResourceLimitError& e) {
    err << "error: " << e.what() << " (raise --max-cliques or --max-subsets)\n";
    return kError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kError;
  }
  return kError;
}

}  // namespace tempconn
