#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "tempconn/temporal_graph.hpp"

namespace tempconn {

struct SelftestOptions {
  std::size_t trials = 100;
  std::size_t max_n = 9;
  std::uint64_t seed = 1;
  /// Corrupt one fast answer on purpose, to exercise the failure path.
  bool inject_failure = false;
  /// Counterexamples go to <dump_prefix>.tg and <dump_prefix>.txt.
  std::string dump_prefix = "counterexample";
};

struct SuiteResult {
  std::string name;
  std::size_t trials = 0;
  std::size_t failures = 0;
  std::string first_failure;
};

struct SelftestReport {
  std::vector<SuiteResult> suites;
  std::string counterexample;  // path of the dumped graph, empty if none

  bool passed() const;
};

/// Randomized comparisons of the fast modules against the oracles:
/// reachability, component enumeration, the FPT search and the gadget
/// equivalences. Output on `log` depends only on the options.
SelftestReport run_selftest(const SelftestOptions& options, std::ostream& log);

/// Greedily deletes vertices and labels while `still_fails` keeps holding.
TemporalGraph minimize_counterexample(const TemporalGraph& g,
                                      const std::function<bool(const TemporalGraph&)>& still_fails);

}  // namespace tempconn
