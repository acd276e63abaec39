#include "oddplanar/search.hpp"

#include <chrono>
#include <numeric>
#include <set>

#include "oddplanar/construct.hpp"
#include "oddplanar/crossing_stats.hpp"
#include "oddplanar/rng.hpp"
#include "oddplanar/surgery.hpp"

namespace oddplanar {

namespace {

std::vector<std::pair<VertexId, VertexId>> non_edges(const Drawing& d) {
  const Multigraph& g = d.graph();
  std::set<std::pair<VertexId, VertexId>> have;
  for (const Edge& e : g.edges()) have.insert({std::min(e.u, e.v), std::max(e.u, e.v)});
  std::vector<std::pair<VertexId, VertexId>> out;
  for (VertexId a : g.vertices()) {
    for (VertexId b : g.vertices()) {
      if (a < b && !have.count({a, b})) out.push_back({a, b});
    }
  }
  return out;
}

// Inserts an edge u-v along a seeded route that only crosses edges with
// spare odd capacity, and keeps it if the drawing stays k-odd-plane.
std::optional<Drawing> try_route(const Drawing& d, const Edge& e, int k, Rng& rng) {
  const CrossingStats st = crossing_stats(d);
  auto spare = [&](EdgeId f) { return st.odd_degree.at(f) < k; };
  const auto route = find_route(d, e.u, e.v, spare, rng.next() | 1U);
  if (!route || static_cast<int>(route->crossed.size()) > k) return std::nullopt;
  Drawing out = insert_edge(d, e, *route);
  if (!check_planarity_class(out, k, PlanarityMode::OddPlane)) return std::nullopt;
  return out;
}

std::vector<std::pair<NodeId, NodeId>> bigons(const Drawing& d) {
  std::vector<std::pair<NodeId, NodeId>> out;
  for (const auto& f : d.faces()) {
    if (f.size() != 2) continue;
    const NodeId a = d.dart(f[0]).node, b = d.dart(f[1]).node;
    if (d.is_crossing(a) && d.is_crossing(b) && d.dart(f[0]).edge != d.dart(f[1]).edge) {
      out.push_back({std::min(a, b), std::max(a, b)});
    }
  }
  return out;
}

}  // namespace

SearchResult extremal_search(int k, int n, const SearchBudget& budget, std::uint64_t seed) {
  if (k < 0 || n < 3) throw Error(ErrorKind::InvalidArgument, "search needs k >= 0 and n >= 3");
  if (budget.iterations <= 0 && budget.time_limit <= 0) {
    throw Error(ErrorKind::InvalidArgument, "search needs an iteration or time budget");
  }
  const auto start = std::chrono::steady_clock::now();
  Rng rng(seed);
  std::vector<VertexId> vs(static_cast<std::size_t>(n));
  std::iota(vs.begin(), vs.end(), 0);
  Drawing cur = Drawing::empty(vs);
  Drawing best = cur;
  SearchStats stats;
  std::int64_t stale = 0;

  for (std::int64_t it = 0; budget.iterations <= 0 || it < budget.iterations; ++it) {
    if (budget.time_limit > 0 && (it & 63) == 0) {
      const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
      if (dt.count() > budget.time_limit) {
        stats.time_limit_hit = true;
        break;
      }
    }
    stats.iterations = it + 1;
    const double r = rng.unit();
    const auto m = static_cast<std::int64_t>(cur.graph().edge_count());
    if (r < 0.70) {
      const auto missing = non_edges(cur);
      if (!missing.empty()) {
        const auto [u, v] = missing[rng.below(missing.size())];
        if (auto next = try_route(cur, {cur.graph().next_edge_id(), u, v}, k, rng)) {
          cur = *std::move(next);
          ++stats.adds;
        }
      }
    } else if (r < 0.80) {
      const auto bg = bigons(cur);
      if (!bg.empty() && rng.below(2) == 0) {
        const auto [p, q] = bg[rng.below(bg.size())];
        cur = undo_double_crossing(cur, p, q);
        ++stats.toggles;
      } else if (m > 1 && static_cast<std::int64_t>(cur.crossing_node_count()) < 2 * m) {
        std::vector<std::pair<DartId, DartId>> options;
        for (const auto& f : cur.faces()) {
          for (DartId a : f) {
            for (DartId b : f) {
              if (cur.dart(a).edge != cur.dart(b).edge) options.push_back({a, b});
            }
          }
        }
        if (!options.empty()) {
          const auto [a, b] = options[rng.below(options.size())];
          cur = double_crossing(cur, a, b);
          ++stats.toggles;
        }
      }
    } else if (stale < 300) {
      if (m > 0) {
        const Edge e = cur.graph().edges()[rng.below(static_cast<std::uint64_t>(m))];
        const Drawing without = remove_edges(cur, {e.id});
        if (auto next = try_route(without, e, k, rng)) {
          cur = *std::move(next);
          ++stats.reroutes;
        }
      }
    } else {
      // Stuck: restart from the best drawing with a few edges dropped.
      cur = best;
      const auto drop = 1 + rng.below(3);
      for (std::uint64_t t = 0; t < drop && cur.graph().edge_count() > 0; ++t) {
        const auto es = cur.graph().edges();
        cur = remove_edges(cur, {es[rng.below(es.size())].id});
        ++stats.removals;
      }
      stale = 0;
    }
    if (cur.graph().edge_count() > best.graph().edge_count()) {
      best = cur;
      stats.best_iteration = it;
      stale = 0;
    } else {
      ++stale;
    }
  }

  SearchResult res;
  res.best = best;
  res.edges = static_cast<std::int64_t>(best.graph().edge_count());
  res.modd_upper = modd_upper(k, n);
  res.mk_upper = mk_upper(k, n);
  res.gap_to_mk = res.edges - res.mk_upper;
  res.audit = audit_drawing(best, k);
  res.stats = stats;
  return res;
}

}  // namespace oddplanar
