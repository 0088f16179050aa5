#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tempconn/reachability.hpp"
#include "tempconn/simple_graph.hpp"
#include "tempconn/temporal_graph.hpp"

namespace tempconn {

/// Mutual: both directions per pair. Unilateral: at least one.
enum class Connectivity { mutual, unilateral };
/// Closed: walks must stay inside the set.
enum class Closure { open, closed };

/// (mutual, open) = tcc, (unilateral, open) = tucc, and their closed variants.
struct ComponentQuery {
  Connectivity kind = Connectivity::mutual;
  Closure closure = Closure::open;
  Model model = Model::non_strict;

  friend bool operator==(const ComponentQuery&, const ComponentQuery&) = default;
};

/// "tcc", "tucc", "closed tcc" or "closed tucc".
std::string component_name(const ComponentQuery& q);

/// Hard caps for the exponential searches. Exceeding one throws
/// ResourceLimitError rather than returning a partial answer.
struct SearchBudget {
  std::size_t max_cliques = 1'000'000;
  /// Vertex sets tested for closed connectivity per call.
  std::size_t max_subsets = std::size_t{1} << 24;
  /// Worker threads for building the reachability digraph.
  unsigned threads = 1;
};

struct ComponentReport {
  ComponentQuery query;
  /// Each set sorted; sets sorted lexicographically.
  std::vector<VertexSet> components;

  std::size_t count() const noexcept { return components.size(); }
  std::size_t max_size() const noexcept;
};

/// Repeated connectivity tests against one graph. Open tests sweep the whole
/// graph; closed tests sweep with every vertex outside the set blocked, which
/// is the same as sweeping the induced temporal subgraph.
class ConnectivityTester {
 public:
  ConnectivityTester(const TemporalGraph& g, Model m);

  bool connected(std::span<const Vertex> s, Connectivity kind, Closure closure);

 private:
  const TemporalGraph& g_;
  ReachSweeper sweeper_;
  std::vector<char> allowed_;
  std::vector<char> matrix_;
};

/// Empty sets and singletons are connected. O(|S| * M log n).
bool is_connected_set(const TemporalGraph& g, std::span<const Vertex> s, const ComponentQuery& q);

/// Whole vertex set, open variant. A quadratic-time check; no asymptotically
/// faster algorithm is expected (SETH-based lower bound).
bool is_temporally_connected(const TemporalGraph& g, Connectivity kind, Model m);

/// Open kinds: connected and no single-vertex extension is connected.
/// Closed kinds: closed-connected and no strict superset is, searching only
/// supersets that are (full) cliques of the reachability digraph. The empty
/// set is never maximal.
bool is_maximal_component(const TemporalGraph& g, std::span<const Vertex> s,
                          const ComponentQuery& q, const SearchBudget& budget = {});

/// Open kinds: maximal cliques of F (mutual) or of the underlying graph of R
/// (unilateral). Closed kinds: inclusion-maximal closed-connected subsets of
/// those cliques. Exponential in the worst case.
ComponentReport enumerate_components(const TemporalGraph& g, const ComponentQuery& q,
                                     const SearchBudget& budget = {});

enum class Algorithm { automatic, brute, fpt };

/// A connected set of the queried kind with at least k vertices, or nullopt.
/// `automatic` uses the FPT search when the graph is undirected and the model
/// non-strict, and brute force otherwise.
std::optional<VertexSet> has_component_of_size(const TemporalGraph& g, const ComponentQuery& q,
                                               std::size_t k, Algorithm algo = Algorithm::automatic,
                                               const SearchBudget& budget = {});

/// F for mutual kinds, underlying(R) for unilateral ones.
SimpleGraph compatibility_graph(const ReachabilityDigraph& r, Connectivity kind);

}  // namespace tempconn
