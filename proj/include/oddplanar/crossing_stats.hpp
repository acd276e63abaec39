#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "oddplanar/drawing.hpp"

namespace oddplanar {

/// Dense per-pair crossing counts, indexed like `graph.edges()`.
struct PairCounts {
  std::size_t m = 0;
  std::vector<int> counts;      // m * m, symmetric, zero diagonal
  std::vector<int> self;        // self-crossing nodes per edge

  int pair(std::size_t i, std::size_t j) const { return counts[i * m + j]; }
};

PairCounts pair_crossing_counts(const Drawing& d);

/// Crossing nodes shared by the paths of two distinct edges.
int crossing_count(const Drawing& d, EdgeId e, EdgeId f);
/// Crossing nodes where both passes belong to `e`.
int self_crossing_count(const Drawing& d, EdgeId e);

enum class Variant { Cr, Pcr, Ocr };
/// Plus forbids adjacent crossings, Zero counts them, Minus ignores them,
/// Star only admits drawings where adjacent pairs cross evenly.
enum class Rule { Plus, Zero, Minus, Star };

const char* to_string(Variant v);
const char* to_string(Rule r);

struct CrossingStats {
  std::map<std::pair<EdgeId, EdgeId>, int> pair_counts;  // only nonzero pairs, first < second
  std::map<EdgeId, int> self_counts;                      // only nonzero
  int cr = 0, pcr = 0, ocr = 0;                           // rule 0
  int cr_minus = 0, pcr_minus = 0, ocr_minus = 0;         // rule -
  int self_crossings = 0;
  bool plus_admissible = true;   // no adjacent pair crosses
  bool star_admissible = true;   // every adjacent pair crosses evenly
  std::map<EdgeId, int> odd_degree;    // edges crossing it oddly, every edge listed
  std::map<EdgeId, int> edge_crossings;  // crossings on the edge, self-crossings once each

  /// Value of one Table-style entry for this drawing, or nullopt when the
  /// drawing is not admissible under the rule.
  std::optional<int> value(Variant v, Rule r) const;
};

CrossingStats crossing_stats(const Drawing& d);

enum class PlanarityMode { Plane, OddPlane };

/// Plane: every edge carries at most k crossings (self-crossings and
/// adjacent crossings included). OddPlane: every edge is crossed oddly by at
/// most k other edges.
bool check_planarity_class(const Drawing& d, int k, PlanarityMode mode);

}  // namespace oddplanar
