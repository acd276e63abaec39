#pragma once

#include <cstdint>

#include "oddplanar/bounds.hpp"
#include "oddplanar/drawing.hpp"

namespace oddplanar {

/// Zero means no limit for either field (but not both).
struct SearchBudget {
  std::int64_t iterations = 20000;
  double time_limit = 0;  // seconds
};

struct SearchStats {
  std::int64_t iterations = 0;
  std::int64_t adds = 0;
  std::int64_t removals = 0;
  std::int64_t reroutes = 0;
  std::int64_t toggles = 0;
  std::int64_t best_iteration = 0;
  bool time_limit_hit = false;
};

struct SearchResult {
  Drawing best;
  std::int64_t edges = 0;
  std::int64_t modd_upper = 0;
  std::int64_t mk_upper = 0;
  /// edges - mk_upper; positive values would exceed the k-planar bound.
  std::int64_t gap_to_mk = 0;
  BoundReport audit;
  SearchStats stats;
};

/// Stochastic local search for k-odd-plane drawings on n vertices with many
/// edges. Moves: add an edge along a random shortest dual route, reroute an
/// edge, toggle a double crossing, and occasionally drop an edge to escape
/// plateaus. Every accepted state is k-odd-plane. The best drawing found is
/// audited; its edge count exceeding modd_upper(k, n) is reported as an
/// alert. Deterministic for a fixed seed when only the iteration budget
/// applies.
SearchResult extremal_search(int k, int n, const SearchBudget& budget, std::uint64_t seed);

}  // namespace oddplanar
