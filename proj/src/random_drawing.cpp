#include "oddplanar/random_drawing.hpp"

#include <algorithm>
#include <numeric>

#include "oddplanar/rng.hpp"

namespace oddplanar {

const char* to_string(RandomModel m) {
  return m == RandomModel::Convex ? "convex" : "perturbed-even";
}

Drawing convex_drawing(const Multigraph& g, const std::vector<VertexId>& order) {
  if (order.size() != g.vertex_count()) throw Error(ErrorKind::InvalidArgument, "order size mismatch");
  if (order.size() > 500) throw Error(ErrorKind::InvalidArgument, "convex model supports at most 500 vertices");
  constexpr std::int64_t kStep = 64;
  for (std::uint64_t attempt = 0; attempt < 64; ++attempt) {
    // Attempt 0 uses evenly spaced points; later attempts jitter them.
    Rng rng(attempt);
    std::map<VertexId, Point> pos;
    for (std::size_t i = 0; i < order.size(); ++i) {
      const std::int64_t jitter = attempt == 0 ? 0 : static_cast<std::int64_t>(rng.below(kStep / 2));
      const std::int64_t x = static_cast<std::int64_t>(i) * kStep + jitter;
      pos[order[i]] = {x, x * x};
    }
    try {
      return drawing_from_polylines(g, pos);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::DegenerateGeometry) throw;
    }
  }
  throw Error(ErrorKind::DegenerateGeometry, "no general-position placement found");
}

RandomDrawing random_drawing_ex(const Multigraph& g, std::uint64_t seed, RandomModel model, int moves) {
  if (!g.is_simple()) throw Error(ErrorKind::InvalidArgument, "random drawings need a simple graph");
  Rng rng(seed);
  if (model == RandomModel::Convex) {
    std::vector<VertexId> order(g.vertices().begin(), g.vertices().end());
    rng.shuffle(order);
    Drawing d = convex_drawing(g, order);
    return {d, d, {}};
  }
  std::optional<Drawing> start = try_embed_planar(g);
  if (!start) start = convex_drawing(g, {g.vertices().begin(), g.vertices().end()});
  PerturbResult r = perturb_even(*start, moves, rng.next());
  return {std::move(r.drawing), *std::move(start), std::move(r.moves)};
}

Multigraph random_graph(int n, int m, std::uint64_t seed) {
  std::vector<std::pair<int, int>> all;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) all.push_back({i, j});
  }
  if (m < 0 || static_cast<std::size_t>(m) > all.size()) {
    throw Error(ErrorKind::InvalidArgument, "edge count out of range");
  }
  Rng rng(seed);
  rng.shuffle(all);
  all.resize(static_cast<std::size_t>(m));
  std::sort(all.begin(), all.end());
  std::vector<VertexId> vs(static_cast<std::size_t>(n));
  std::iota(vs.begin(), vs.end(), 0);
  std::vector<Edge> es;
  for (auto [a, b] : all) es.push_back({static_cast<EdgeId>(es.size()), a, b});
  return Multigraph(vs, es);
}

Multigraph random_planar_graph(int n, int m, std::uint64_t seed) {
  std::vector<std::pair<int, int>> all;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) all.push_back({i, j});
  }
  Rng rng(seed);
  rng.shuffle(all);
  std::vector<VertexId> vs(static_cast<std::size_t>(n));
  std::iota(vs.begin(), vs.end(), 0);
  std::vector<std::pair<int, int>> kept;
  for (auto pr : all) {
    if (static_cast<int>(kept.size()) >= m) break;
    kept.push_back(pr);
    std::vector<Edge> es;
    for (auto [a, b] : kept) es.push_back({static_cast<EdgeId>(es.size()), a, b});
    if (!try_embed_planar(Multigraph(vs, es))) kept.pop_back();
  }
  std::sort(kept.begin(), kept.end());
  std::vector<Edge> es;
  for (auto [a, b] : kept) es.push_back({static_cast<EdgeId>(es.size()), a, b});
  return Multigraph(vs, es);
}

}  // namespace oddplanar
