#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "tempconn/components.hpp"

namespace tempconn {

/// (k-1)^timesteps for mutual kinds, (k-2)^(k-1) for unilateral kinds.
/// Throws CapOverflowError when the value does not fit in 64 bits.
std::uint64_t degree_cap(std::size_t k, std::size_t timesteps, Connectivity kind);

/// Undirected graph under the non-strict model.
bool fpt_supported(const TemporalGraph& g, const ComponentQuery& q);

/// What one fpt_find call observed; used to audit the degree caps.
struct FptStats {
  /// Answer came from a shortcut (k <= 2, k > n, a large snapshot component,
  /// a high-degree vertex, or a long temporal path).
  bool trivial = false;
  /// Cap in force for the search phase (0 if the search did not run).
  std::uint64_t cap = 0;
  /// Largest neighbourhood in F (mutual) or underlying(R) (unilateral).
  std::size_t max_neighborhood = 0;
};

/// Searches for a connected set of size >= k. Each vertex u is tried with
/// subsets of its neighbourhood in F (mutual) or in the underlying graph of R
/// (unilateral), in ascending order, and the first hit is returned. After the
/// shortcuts fail those neighbourhoods are bounded by `degree_cap`, where the
/// number of timesteps is the number of distinct labels.
///
/// Throws UnsupportedQuery for directed graphs or the strict model.
std::optional<VertexSet> fpt_find(const TemporalGraph& g, const ComponentQuery& q, std::size_t k,
                                  FptStats* stats = nullptr);

}  // namespace tempconn
