#include "oddplanar/lemma1.hpp"

#include <algorithm>
#include <map>

#include "detail/map_editor.hpp"
#include "detail/slot_builder.hpp"

namespace oddplanar {

OneVertexSketch OneVertexSketch::from_rotation(VertexId vertex, std::vector<Ending> rotation) {
  OneVertexSketch s;
  s.vertex = vertex;
  s.rotation = std::move(rotation);
  for (const Ending& x : s.rotation) s.loops.push_back(x.edge);
  std::sort(s.loops.begin(), s.loops.end());
  s.loops.erase(std::unique(s.loops.begin(), s.loops.end()), s.loops.end());
  if (!s.rotation.empty()) {
    s.reference_gap = static_cast<int>(std::min_element(s.rotation.begin(), s.rotation.end()) -
                                       s.rotation.begin());
  }
  s.check();
  return s;
}

void OneVertexSketch::check() const {
  if (rotation.size() != 2 * loops.size()) {
    throw Error(ErrorKind::MalformedSketch, "rotation must hold two endings per loop");
  }
  if (!std::is_sorted(loops.begin(), loops.end()) ||
      std::adjacent_find(loops.begin(), loops.end()) != loops.end()) {
    throw Error(ErrorKind::MalformedSketch, "loop ids must be sorted and distinct");
  }
  std::map<EdgeId, int> mask;
  for (const Ending& x : rotation) {
    if (!std::binary_search(loops.begin(), loops.end(), x.edge) || x.end > 1) {
      throw Error(ErrorKind::MalformedSketch, "ending of an unknown loop");
    }
    int& m = mask[x.edge];
    if (m & (1 << x.end)) throw Error(ErrorKind::MalformedSketch, "ending listed twice");
    m |= 1 << x.end;
  }
  if (!rotation.empty() &&
      (reference_gap < 0 || reference_gap >= static_cast<int>(rotation.size()))) {
    throw Error(ErrorKind::MalformedSketch, "reference gap out of range");
  }
}

bool OneVertexSketch::odd(EdgeId e, EdgeId f) const {
  int e_seen = 0;
  int inside = 0;
  for (const Ending& x : rotation) {
    if (x.edge == e) ++e_seen;
    else if (x.edge == f && e_seen == 1) ++inside;
  }
  return inside == 1;
}

namespace {

// Arm slots of a crossing between a loop's straight ending and another
// loop's sweep, clockwise around the crossing point.
constexpr int kOutward = 0;
constexpr int kSweepCw = 1;
constexpr int kInward = 2;
constexpr int kSweepCcw = 3;

}  // namespace

Drawing lemma1_redraw(const OneVertexSketch& sketch) {
  sketch.check();
  const std::size_t loop_count = sketch.loops.size();
  std::vector<Edge> edges;
  for (EdgeId e : sketch.loops) edges.push_back({e, sketch.vertex, sketch.vertex});
  detail::SlotBuilder builder(Multigraph({sketch.vertex}, edges));
  const NodeId v = builder.vertex_node(sketch.vertex);
  const auto total = static_cast<int>(sketch.rotation.size());
  builder.set_slots(v, total);
  if (loop_count == 0) return builder.build();

  // Positions read clockwise from the reference gap.
  auto slot_of = [&](int pos) { return (sketch.reference_gap + pos) % total; };
  std::map<EdgeId, std::pair<int, int>> span;  // minus, plus positions
  std::vector<EdgeId> at(static_cast<std::size_t>(total));
  for (int pos = 0; pos < total; ++pos) {
    const EdgeId e = sketch.rotation[static_cast<std::size_t>(slot_of(pos))].edge;
    at[static_cast<std::size_t>(pos)] = e;
    auto [it, fresh] = span.try_emplace(e, pos, -1);
    if (!fresh) it->second.second = pos;
  }

  // Peel order: rank 0 is removed first and re-inserted last (innermost).
  std::map<EdgeId, int> rank;
  std::vector<EdgeId> remaining(sketch.loops);
  while (!remaining.empty()) {
    for (auto it = remaining.begin(); it != remaining.end(); ++it) {
      const auto [lo, hi] = span[*it];
      const bool minimal = std::none_of(remaining.begin(), remaining.end(), [&](EdgeId f) {
        return f != *it && span[f].first > lo && span[f].second < hi;
      });
      if (minimal) {
        rank[*it] = static_cast<int>(rank.size());
        remaining.erase(it);
        break;
      }
    }
  }

  // One crossing per (sweeping loop, ending position strictly inside its span,
  // owned by a loop peeled later).
  std::map<std::pair<EdgeId, int>, NodeId> crossing;
  auto node_for = [&](EdgeId sweeper, int pos) {
    auto [it, fresh] = crossing.try_emplace({sweeper, pos}, kNone);
    if (fresh) it->second = builder.add_crossing();
    return it->second;
  };
  std::vector<EdgeId> by_rank(loop_count);
  for (const auto& [e, r] : rank) by_rank[static_cast<std::size_t>(r)] = e;

  for (EdgeId e : sketch.loops) {
    const auto [lo, hi] = span[e];
    const int r = rank[e];
    std::vector<detail::PathStep> steps;
    steps.push_back({v, -1, slot_of(lo)});
    for (int j = 0; j < r; ++j) {  // outward along the minus ending
      const EdgeId a = by_rank[static_cast<std::size_t>(j)];
      if (span[a].first < lo && lo < span[a].second) {
        steps.push_back({node_for(a, lo), kInward, kOutward});
      }
    }
    for (int pos = lo + 1; pos < hi; ++pos) {  // clockwise sweep
      if (rank[at[static_cast<std::size_t>(pos)]] > r) {
        steps.push_back({node_for(e, pos), kSweepCcw, kSweepCw});
      }
    }
    for (int j = r - 1; j >= 0; --j) {  // back in along the plus ending
      const EdgeId a = by_rank[static_cast<std::size_t>(j)];
      if (span[a].first < hi && hi < span[a].second) {
        steps.push_back({node_for(a, hi), kOutward, kInward});
      }
    }
    steps.push_back({v, slot_of(hi), -1});
    // Paths run from end 0 to end 1.
    if (sketch.rotation[static_cast<std::size_t>(slot_of(lo))].end != 0) {
      std::reverse(steps.begin(), steps.end());
      for (auto& s : steps) std::swap(s.in_slot, s.out_slot);
    }
    builder.set_path(e, std::move(steps));
  }
  return builder.build();
}

Drawing remove_self_crossings(const Drawing& input) {
  Drawing d = input;
  for (;;) {
    NodeId target = kNone;
    for (NodeId n = 0; n < static_cast<NodeId>(d.nodes().size()); ++n) {
      const MapNode& node = d.node(n);
      if (node.kind == NodeKind::Crossing &&
          d.dart(node.rotation[0]).edge == d.dart(node.rotation[1]).edge) {
        target = n;
        break;
      }
    }
    if (target == kNone) return d;
    const EdgeId e = d.dart(d.node(target).rotation[0]).edge;
    const auto path = d.path(e);
    std::vector<std::size_t> arrivals;
    for (std::size_t k = 0; k < path.size(); ++k) {
      if (d.dart(d.dart(path[k]).twin).node == target) arrivals.push_back(k);
    }
    // Reconnect entry with entry and exit with exit: the loop between the two
    // visits is kept but traversed backwards, so the edge stays one curve.
    detail::MapEditor ed(d);
    const DartId entry1 = d.dart(path[arrivals[0]]).twin;
    const DartId exit1 = path[arrivals[0] + 1];
    const DartId entry2 = d.dart(path[arrivals[1]]).twin;
    const DartId exit2 = path[arrivals[1] + 1];
    ed.join_arms(entry1, entry2);
    ed.join_arms(exit1, exit2);
    ed.drop_node(target);
    d = ed.finish();
  }
}

}  // namespace oddplanar
