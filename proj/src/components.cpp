#include "tempconn/components.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <unordered_set>

#include "tempconn/clique.hpp"
#include "tempconn/error.hpp"
#include "tempconn/fpt.hpp"

namespace tempconn {

namespace {

struct SetHash {
  std::size_t operator()(const VertexSet& s) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (Vertex v : s) h = (h ^ v) * 1099511628211ULL;
    return h;
  }
};

bool pair_ok(bool uv, bool vu, Connectivity kind) {
  return kind == Connectivity::mutual ? (uv && vu) : (uv || vu);
}

VertexSet members_of_mask(const VertexSet& base, std::uint64_t mask) {
  VertexSet out;
  for (std::size_t i = 0; i < base.size(); ++i)
    if ((mask >> i) & 1U) out.push_back(base[i]);
  return out;
}

// Lexicographically next mask with the same popcount (Gosper).
std::uint64_t next_same_popcount(std::uint64_t x) {
  std::uint64_t c = x & (~x + 1);
  std::uint64_t r = x + c;
  return (((r ^ x) >> 2) / c) | r;
}

void charge(std::size_t& used, const SearchBudget& budget) {
  if (++used > budget.max_subsets)
    throw ResourceLimitError("subset budget of " + std::to_string(budget.max_subsets) +
                             " exceeded");
}

}  // namespace

std::string component_name(const ComponentQuery& q) {
  std::string base = q.kind == Connectivity::mutual ? "tcc" : "tucc";
  return q.closure == Closure::closed ? "closed " + base : base;
}

std::size_t ComponentReport::max_size() const noexcept {
  std::size_t best = 0;
  for (const auto& c : components) best = std::max(best, c.size());
  return best;
}

ConnectivityTester::ConnectivityTester(const TemporalGraph& g, Model m)
    : g_(g), sweeper_(g, m), allowed_(g.vertex_count(), 0) {}

bool ConnectivityTester::connected(std::span<const Vertex> s, Connectivity kind, Closure closure) {
  const std::size_t k = s.size();
  if (k <= 1) return true;
  if (closure == Closure::closed)
    for (Vertex v : s) allowed_[v] = 1;
  matrix_.assign(k * k, 0);
  bool ok = true;
  for (std::size_t i = 0; i < k && ok; ++i) {
    if (closure == Closure::closed)
      sweeper_.run(s[i], allowed_);
    else
      sweeper_.run(s[i]);
    for (std::size_t j = 0; j < k; ++j) matrix_[i * k + j] = sweeper_.reached(s[j]) ? 1 : 0;
    // Mutual connectivity fails as soon as one row misses a member.
    if (kind == Connectivity::mutual)
      for (std::size_t j = 0; j < k; ++j)
        if (!matrix_[i * k + j]) ok = false;
  }
  if (ok && kind == Connectivity::unilateral)
    for (std::size_t i = 0; i < k && ok; ++i)
      for (std::size_t j = i + 1; j < k && ok; ++j)
        if (!matrix_[i * k + j] && !matrix_[j * k + i]) ok = false;
  if (closure == Closure::closed)
    for (Vertex v : s) allowed_[v] = 0;
  return ok;
}

bool is_connected_set(const TemporalGraph& g, std::span<const Vertex> s, const ComponentQuery& q) {
  validate_vertex_set(g, s);
  ConnectivityTester tester(g, q.model);
  return tester.connected(s, q.kind, q.closure);
}

bool is_temporally_connected(const TemporalGraph& g, Connectivity kind, Model m) {
  VertexSet all(g.vertex_count());
  for (Vertex v = 0; v < all.size(); ++v) all[v] = v;
  ConnectivityTester tester(g, m);
  return tester.connected(all, kind, Closure::open);
}

SimpleGraph compatibility_graph(const ReachabilityDigraph& r, Connectivity kind) {
  return kind == Connectivity::mutual ? symmetric_core(r) : underlying_graph(r);
}

namespace {

// Cliques T of `compat` inside `candidates` (ascending), each tried as an
// extension S u T. Returns true on the first connected extension.
class ClosedExtensionSearch {
 public:
  ClosedExtensionSearch(const SimpleGraph& compat, ConnectivityTester& tester,
                        const ComponentQuery& q, const SearchBudget& budget)
      : compat_(compat), tester_(tester), q_(q), budget_(budget) {}

  bool run(const VertexSet& base, const VertexSet& candidates) {
    base_ = base;
    candidates_ = candidates;
    chosen_.clear();
    return extend(0);
  }

 private:
  bool extend(std::size_t from) {
    for (std::size_t i = from; i < candidates_.size(); ++i) {
      Vertex v = candidates_[i];
      bool fits = std::all_of(chosen_.begin(), chosen_.end(),
                              [&](Vertex c) { return compat_.adjacent(c, v); });
      if (!fits) continue;
      chosen_.push_back(v);
      charge(used_, budget_);
      VertexSet trial = base_;
      trial.insert(trial.end(), chosen_.begin(), chosen_.end());
      std::sort(trial.begin(), trial.end());
      if (tester_.connected(trial, q_.kind, Closure::closed)) return true;
      if (extend(i + 1)) return true;
      chosen_.pop_back();
    }
    return false;
  }

  const SimpleGraph& compat_;
  ConnectivityTester& tester_;
  const ComponentQuery& q_;
  const SearchBudget& budget_;
  std::size_t used_ = 0;
  VertexSet base_, candidates_, chosen_;
};

}  // namespace

bool is_maximal_component(const TemporalGraph& g, std::span<const Vertex> s,
                          const ComponentQuery& q, const SearchBudget& budget) {
  validate_vertex_set(g, s);
  if (s.empty()) return false;
  ConnectivityTester tester(g, q.model);
  if (!tester.connected(s, q.kind, q.closure)) return false;

  const auto r = reachability_digraph(g, q.model, budget.threads);
  std::vector<char> in_s(g.vertex_count(), 0);
  for (Vertex v : s) in_s[v] = 1;
  VertexSet candidates;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (in_s[v]) continue;
    bool fits = std::all_of(s.begin(), s.end(), [&](Vertex u) {
      return pair_ok(r.has_arc(u, v), r.has_arc(v, u), q.kind);
    });
    if (fits) candidates.push_back(v);
  }
  if (q.closure == Closure::open) return candidates.empty();

  const SimpleGraph compat = compatibility_graph(r, q.kind);
  ClosedExtensionSearch search(compat, tester, q, budget);
  return !search.run(VertexSet(s.begin(), s.end()), candidates);
}

namespace {

// Inclusion-maximal closed connected subsets of one clique of the
// compatibility graph, largest first. Subsets of already found sets are
// skipped without testing.
void closed_sets_in_clique(const VertexSet& clique, ConnectivityTester& tester,
                           const ComponentQuery& q, const SearchBudget& budget,
                           std::vector<VertexSet>& found,
                           std::unordered_set<VertexSet, SetHash>& seen) {
  const std::size_t k = clique.size();
  if (k > 62 || (std::uint64_t{1} << k) > budget.max_subsets)
    throw ResourceLimitError("clique of size " + std::to_string(k) +
                             " exceeds the subset budget of " +
                             std::to_string(budget.max_subsets));
  auto covered = [&](const VertexSet& t) {
    return std::any_of(found.begin(), found.end(), [&](const VertexSet& f) {
      return f.size() >= t.size() && std::includes(f.begin(), f.end(), t.begin(), t.end());
    });
  };
  for (std::size_t size = k; size >= 1; --size) {
    const std::uint64_t limit = std::uint64_t{1} << k;
    for (std::uint64_t mask = (std::uint64_t{1} << size) - 1; mask < limit;
         mask = next_same_popcount(mask)) {
      VertexSet t = members_of_mask(clique, mask);
      if (seen.count(t) || covered(t)) continue;
      if (tester.connected(t, q.kind, Closure::closed)) {
        seen.insert(t);
        found.push_back(std::move(t));
      }
    }
  }
}

std::vector<VertexSet> keep_inclusion_maximal(std::vector<VertexSet> sets) {
  std::sort(sets.begin(), sets.end(),
            [](const VertexSet& a, const VertexSet& b) { return a.size() > b.size(); });
  std::vector<VertexSet> kept;
  for (auto& s : sets) {
    bool inside = std::any_of(kept.begin(), kept.end(), [&](const VertexSet& f) {
      return f.size() > s.size() && std::includes(f.begin(), f.end(), s.begin(), s.end());
    });
    if (!inside) kept.push_back(std::move(s));
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

}  // namespace

ComponentReport enumerate_components(const TemporalGraph& g, const ComponentQuery& q,
                                     const SearchBudget& budget) {
  ComponentReport report{q, {}};
  const auto r = reachability_digraph(g, q.model, budget.threads);
  const SimpleGraph compat = compatibility_graph(r, q.kind);
  auto cliques = maximal_cliques(compat, budget.max_cliques);
  if (q.closure == Closure::open) {
    report.components = std::move(cliques);
    return report;
  }
  ConnectivityTester tester(g, q.model);
  std::vector<VertexSet> found;
  std::unordered_set<VertexSet, SetHash> seen;
  for (const auto& clique : cliques) closed_sets_in_clique(clique, tester, q, budget, found, seen);
  report.components = keep_inclusion_maximal(std::move(found));
  return report;
}

namespace {

std::optional<VertexSet> brute_find(const TemporalGraph& g, const ComponentQuery& q,
                                    std::size_t k, const SearchBudget& budget) {
  const auto r = reachability_digraph(g, q.model, budget.threads);
  const SimpleGraph compat = compatibility_graph(r, q.kind);
  auto cliques = maximal_cliques(compat, budget.max_cliques);
  if (q.closure == Closure::open) {
    for (auto& c : cliques)
      if (c.size() >= k) return c;
    return std::nullopt;
  }
  ConnectivityTester tester(g, q.model);
  std::size_t used = 0;
  for (const auto& clique : cliques) {
    const std::size_t size = clique.size();
    if (size < k) continue;
    if (size > 62) throw ResourceLimitError("clique too large for subset search");
    const std::uint64_t limit = std::uint64_t{1} << size;
    for (std::size_t want = size; want >= k; --want) {
      for (std::uint64_t mask = (std::uint64_t{1} << want) - 1; mask < limit;
           mask = next_same_popcount(mask)) {
        charge(used, budget);
        VertexSet t = members_of_mask(clique, mask);
        if (tester.connected(t, q.kind, Closure::closed)) return t;
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<VertexSet> has_component_of_size(const TemporalGraph& g, const ComponentQuery& q,
                                               std::size_t k, Algorithm algo,
                                               const SearchBudget& budget) {
  if (k == 0) throw InvalidArgument("k must be at least 1");
  if (k > g.vertex_count()) return std::nullopt;
  if (k == 1) return VertexSet{0};
  switch (algo) {
    case Algorithm::fpt:
      return fpt_find(g, q, k);
    case Algorithm::automatic:
      if (fpt_supported(g, q)) {
        try {
          return fpt_find(g, q, k);
        } catch (const CapOverflowError&) {
          // Caps beyond 64 bits say nothing useful; fall through to brute force.
        }
      }
      [[fallthrough]];
    case Algorithm::brute:
      break;
  }
  return brute_find(g, q, k, budget);
}

}  // namespace tempconn
