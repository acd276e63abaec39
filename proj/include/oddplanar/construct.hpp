#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "oddplanar/drawing.hpp"

namespace oddplanar {

struct Point {
  std::int64_t x = 0;
  std::int64_t y = 0;

  bool operator==(const Point&) const = default;
};

/// Drawing of `g` with straight vertices at `pos` and every edge a polyline
/// through its optional bends (listed from end 0 towards end 1). All
/// arithmetic is exact; coordinates must stay below 2^31 in magnitude.
/// Throws Error(DegenerateGeometry) when curves touch, overlap, meet at a
/// bend, pass through a vertex or three of them share a crossing point.
Drawing drawing_from_polylines(const Multigraph& g, const std::map<VertexId, Point>& pos,
                               const std::map<EdgeId, std::vector<Point>>& bends = {});

/// Crossing-free drawing from a rotation system given as clockwise edge-id
/// lists per vertex (`rotation[i]` belongs to `g.vertices()[i]`). Loops are
/// not supported. The result is not validated.
Drawing drawing_from_rotation_system(const Multigraph& g,
                                     const std::vector<std::vector<EdgeId>>& rotation);

/// Crossing-free drawing of a planar graph, or nullopt if `g` is not planar.
/// Requires a graph without loops or parallel edges.
std::optional<Drawing> try_embed_planar(const Multigraph& g);
/// As above, throws Error(InvalidArgument) for a nonplanar graph.
Drawing embed_planar(const Multigraph& g);

/// Route for a new edge. The new dart at the first endpoint goes right
/// before `start` in its rotation, so the edge leaves into the face of
/// `start`; it then crosses the segments of `crossed` in order (each dart
/// lying on the face currently traversed) and enters the second endpoint
/// right before `end`. `start`/`end` are kNone for a vertex without darts.
struct InsertionRoute {
  DartId start = kNone;
  std::vector<DartId> crossed;
  DartId end = kNone;
};

/// Shortest route between two vertices through the dual, crossing only
/// segments of edges accepted by `may_cross`. Ties are broken by `order`
/// (a permutation seed; 0 keeps the natural order). Nullopt if none exists.
std::optional<InsertionRoute> find_route(const Drawing& d, VertexId u, VertexId v,
                                         const std::function<bool(EdgeId)>& may_cross,
                                         std::uint64_t order = 0);

/// Adds edge `e` (with e.u as end 0) along `route`. The result is not
/// validated; an inconsistent route gives an invalid map.
Drawing insert_edge(const Drawing& d, const Edge& e, const InsertionRoute& route);

/// Parity-preserving move: pushes a finger of the edge through dart `a`
/// across the segment of dart `b`, creating two crossings that bound a
/// bigon. `a` and `b` must lie on the same face and belong to different
/// edges. The new crossing nodes are reported through `created`.
Drawing double_crossing(const Drawing& d, DartId a, DartId b,
                        std::pair<NodeId, NodeId>* created = nullptr);
/// Inverse of `double_crossing`: removes two crossings of the same pair of
/// edges that bound a bigon. Throws Error(InvalidArgument) otherwise.
Drawing undo_double_crossing(const Drawing& d, NodeId p, NodeId q);

/// Adds a small self-crossing curl on the segment of `a`, inside the face of
/// `a`.
Drawing add_curl(const Drawing& d, DartId a);

/// A recorded `double_crossing` application.
struct DoubleCrossingMove {
  DartId a = kNone;
  DartId b = kNone;
  NodeId p = kNone;
  NodeId q = kNone;
};

struct PerturbResult {
  Drawing drawing;
  std::vector<DoubleCrossingMove> moves;
};

/// Applies up to `moves` seeded double-crossing moves, each between a
/// randomly chosen pair of face darts of different edges.
PerturbResult perturb_even(const Drawing& d, int moves, std::uint64_t seed);
/// Replays recorded moves on the drawing they started from.
Drawing replay_moves(const Drawing& d, const std::vector<DoubleCrossingMove>& moves);
/// Undoes recorded moves, last first.
Drawing invert_moves(const Drawing& d, const std::vector<DoubleCrossingMove>& moves);

}  // namespace oddplanar
