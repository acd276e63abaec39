#include "oddplanar/crossing_stats.hpp"

namespace oddplanar {

const char* to_string(Variant v) {
  switch (v) {
    case Variant::Cr: return "cr";
    case Variant::Pcr: return "pcr";
    case Variant::Ocr: return "ocr";
  }
  return "?";
}

const char* to_string(Rule r) {
  switch (r) {
    case Rule::Plus: return "plus";
    case Rule::Zero: return "zero";
    case Rule::Minus: return "minus";
    case Rule::Star: return "star";
  }
  return "?";
}

PairCounts pair_crossing_counts(const Drawing& d) {
  const Multigraph& g = d.graph();
  PairCounts pc;
  pc.m = g.edge_count();
  pc.counts.assign(pc.m * pc.m, 0);
  pc.self.assign(pc.m, 0);
  for (const MapNode& n : d.nodes()) {
    if (n.kind != NodeKind::Crossing || n.rotation.size() != 4) continue;
    auto a = g.edge_index(d.dart(n.rotation[0]).edge);
    auto b = g.edge_index(d.dart(n.rotation[1]).edge);
    if (!a || !b) continue;
    if (*a == *b) {
      ++pc.self[*a];
    } else {
      ++pc.counts[*a * pc.m + *b];
      ++pc.counts[*b * pc.m + *a];
    }
  }
  return pc;
}

int crossing_count(const Drawing& d, EdgeId e, EdgeId f) {
  auto i = d.graph().edge_index(e);
  auto j = d.graph().edge_index(f);
  if (!i || !j) throw Error(ErrorKind::UnknownEdge, "crossing_count");
  if (*i == *j) throw Error(ErrorKind::InvalidArgument, "crossing_count needs two distinct edges");
  return pair_crossing_counts(d).pair(*i, *j);
}

int self_crossing_count(const Drawing& d, EdgeId e) {
  auto i = d.graph().edge_index(e);
  if (!i) throw Error(ErrorKind::UnknownEdge, "edge " + std::to_string(e));
  return pair_crossing_counts(d).self[*i];
}

std::optional<int> CrossingStats::value(Variant v, Rule r) const {
  auto pick = [&](int a, int b, int c) {
    return v == Variant::Cr ? a : (v == Variant::Pcr ? b : c);
  };
  switch (r) {
    case Rule::Zero: return pick(cr, pcr, ocr);
    case Rule::Minus: return pick(cr_minus, pcr_minus, ocr_minus);
    case Rule::Plus:
      if (!plus_admissible) return std::nullopt;
      return pick(cr, pcr, ocr);
    case Rule::Star:
      if (!star_admissible) return std::nullopt;
      return pick(cr, pcr, ocr);
  }
  return std::nullopt;
}

CrossingStats crossing_stats(const Drawing& d) {
  const Multigraph& g = d.graph();
  const PairCounts pc = pair_crossing_counts(d);
  CrossingStats s;
  for (std::size_t i = 0; i < pc.m; ++i) {
    const EdgeId ei = g.edges()[i].id;
    s.odd_degree[ei] = 0;
    s.edge_crossings[ei] = pc.self[i];
    if (pc.self[i] > 0) s.self_counts[ei] = pc.self[i];
    s.self_crossings += pc.self[i];
  }
  for (std::size_t i = 0; i < pc.m; ++i) {
    for (std::size_t j = i + 1; j < pc.m; ++j) {
      const int c = pc.pair(i, j);
      if (c == 0) continue;
      const EdgeId ei = g.edges()[i].id;
      const EdgeId ej = g.edges()[j].id;
      s.pair_counts[{ei, ej}] = c;
      s.edge_crossings[ei] += c;
      s.edge_crossings[ej] += c;
      const bool odd = c % 2 == 1;
      const bool adj = g.adjacent_at(i, j);
      s.cr += c;
      s.pcr += 1;
      s.ocr += odd ? 1 : 0;
      if (!adj) {
        s.cr_minus += c;
        s.pcr_minus += 1;
        s.ocr_minus += odd ? 1 : 0;
      } else {
        s.plus_admissible = false;
        if (odd) s.star_admissible = false;
      }
      if (odd) {
        ++s.odd_degree[ei];
        ++s.odd_degree[ej];
      }
    }
  }
  return s;
}

bool check_planarity_class(const Drawing& d, int k, PlanarityMode mode) {
  if (k < 0) throw Error(ErrorKind::InvalidArgument, "k must be nonnegative");
  const CrossingStats s = crossing_stats(d);
  const auto& per_edge = mode == PlanarityMode::Plane ? s.edge_crossings : s.odd_degree;
  for (const auto& [e, c] : per_edge) {
    if (c > k) return false;
  }
  return true;
}

}  // namespace oddplanar
