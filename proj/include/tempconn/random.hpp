#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "tempconn/instances.hpp"
#include "tempconn/simple_graph.hpp"
#include "tempconn/temporal_graph.hpp"

namespace tempconn {

/// mt19937_64 with plain modulo reduction, so a seed gives the same stream
/// on every platform (the std distributions are implementation-defined).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform-ish in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound) { return engine_() % bound; }
  /// Uniform-ish in [lo, hi].
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }
  bool percent(unsigned p) { return below(100) < p; }

 private:
  std::mt19937_64 engine_;
};

struct RandomGraphSpec {
  std::size_t vertices = 6;
  bool directed = false;
  Time max_label = 3;
  /// Chance (percent) that each pair, or ordered pair when directed, is an edge.
  unsigned density = 40;
  /// Draw labels from 0..max_label instead of 1..max_label.
  bool allow_zero = false;
};

/// Each edge gets a non-empty random subset of the label range.
TemporalGraph random_temporal_graph(Rng& rng, const RandomGraphSpec& spec);

SimpleGraph random_simple_graph(Rng& rng, std::size_t n, unsigned density);
BipartiteGraph random_bipartite(Rng& rng, std::size_t left, std::size_t right, unsigned density);
/// Clauses of 1..width distinct-variable literals over both blocks.
SatInstance random_sat(Rng& rng, std::size_t nx, std::size_t ny, std::size_t clauses,
                       std::size_t width = 3);

}  // namespace tempconn
