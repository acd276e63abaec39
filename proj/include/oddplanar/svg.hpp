#pragma once

#include <string>
#include <vector>

#include "oddplanar/drawing.hpp"

namespace oddplanar {

struct Point2 {
  double x = 0, y = 0;
};

struct Layout {
  /// Position of every map node.
  std::vector<Point2> nodes;
  /// Polyline of every edge (indexed like graph.edges()), from end 0 to end 1.
  std::vector<std::vector<Point2>> edges;
  /// True when the straight-line barycentric layout failed its checks and
  /// segments were routed through subdivision points instead.
  bool fallback = false;
};

/// Straight-line layout of each map component: the outer face (largest by
/// dart count, ties to the smallest dart) is pinned on a convex polygon and
/// the other nodes sit at the average of their neighbours. If the result
/// does not reproduce every rotation, or segments meet away from shared
/// nodes, each segment is subdivided twice and each face gets a ring of
/// corner nodes, which makes the barycentric layout provably planar.
/// Throws Error(DegenerateLayout) if even that fails its checks.
Layout layout_drawing(const Drawing& d);

struct SvgOptions {
  double radius = 400;  // of the pinned outer polygon, per component
  bool labels = true;
};

/// SVG 1.1 document: one polyline per edge (class "edge"), one labelled disk
/// per vertex. Coordinates are printed with 6 decimals and y pointing up in
/// layout space, so clockwise rotations look clockwise on screen.
std::string render_svg(const Drawing& d, const SvgOptions& options = {});

}  // namespace oddplanar
