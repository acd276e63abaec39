#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "oddplanar/crossing_stats.hpp"
#include "oddplanar/drawing.hpp"

namespace oddplanar {

/// Zero for `max_candidates` or `time_limit` means no limit.
struct EnumerationBudget {
  int max_crossings = 1;
  std::int64_t max_candidates = 0;
  double time_limit = 0;  // seconds
};

/// Crossing multiset: pairs of edge indices (into g.edges(), first < second),
/// sorted, one entry per crossing.
using CrossingMultiset = std::vector<std::pair<int, int>>;

/// All crossing multisets with exactly `size` crossings over `pair_count`
/// pairs of a graph with m edges, in lexicographic order.
std::vector<CrossingMultiset> crossing_multisets(int m, int size);

/// Value of a variant under a rule for any drawing with this multiset of
/// crossings, or nullopt when the rule rejects it.
std::optional<int> multiset_value(const Multigraph& g, const CrossingMultiset& x, Variant v, Rule r);

struct EnumerationStats {
  std::int64_t candidates = 0;  // complete rotation assignments examined
  std::int64_t emitted = 0;
  bool complete = true;         // false when the budget ran out
};

/// Every drawing of the simple graph g without self-crossings and with at
/// most `budget.max_crossings` crossings, each once up to homeomorphism of
/// the sphere (mirror images count as different). Drawings arrive in
/// canonical form, ordered by crossing count and then by crossing multiset;
/// the sink returns false to stop early.
EnumerationStats enumerate_drawings(const Multigraph& g, const EnumerationBudget& budget,
                                    const std::function<bool(const Drawing&)>& sink);

/// First drawing (in enumeration order) realizing exactly the crossing
/// multiset `x`, if any. Counts examined candidates into `candidates`.
std::optional<Drawing> realize_multiset(const Multigraph& g, const CrossingMultiset& x,
                                        std::int64_t* candidates = nullptr);

struct CrossingValue {
  bool exact = false;
  /// The minimum when exact; otherwise max_crossings + 1, meaning no
  /// admissible drawing exists with at most max_crossings crossings.
  int value = 0;
  std::optional<Drawing> witness;
  /// Rotation assignments a serial search examines for this query, counted
  /// the same way for any worker count.
  std::int64_t candidates = 0;
};

/// Minimum of the variant over drawings admissible under the rule, among
/// drawings with at most `budget.max_crossings` crossings. Multisets are
/// tried in order of (value, size, lexicographic) and checked in parallel on
/// `threads` workers (0 for the default); the answer and witness do not
/// depend on the worker count. Throws Error(BudgetExceeded) or
/// Error(InvalidArgument) for a non-simple graph.
CrossingValue exact_crossing_value(const Multigraph& g, Variant v, Rule r,
                                   const EnumerationBudget& budget, int threads = 0);

struct CrossingProfileEntry {
  Variant variant;
  Rule rule;
  CrossingValue value;
};

/// exact_crossing_value for all 12 variant/rule combinations, sharing the
/// realizability checks between them.
std::vector<CrossingProfileEntry> crossing_profile(const Multigraph& g, const EnumerationBudget& budget,
                                                   int threads = 0);

/// Compact string equal for two drawings iff they are equal as maps.
std::string canonical_key(const Drawing& d);

}  // namespace oddplanar
