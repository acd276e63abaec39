#pragma once

#include <map>
#include <vector>

#include "oddplanar/construct.hpp"
#include "oddplanar/drawing.hpp"

namespace fixtures {

using namespace oddplanar;

inline Drawing triangle() {
  Multigraph g({0, 1, 2}, {{0, 0, 1}, {1, 1, 2}, {2, 0, 2}});
  return drawing_from_polylines(g, {{0, {0, 0}}, {1, {10, 0}}, {2, {5, 8}}});
}

// Vertices A..E = 0..4 at A(0,0) B(12,0) C(6,12) D(5,4) E(7,4); K5 edges in
// lexicographic order. Only AE and BD cross.
inline std::map<VertexId, Point> k5_positions() {
  return {{0, {0, 0}}, {1, {12, 0}}, {2, {6, 12}}, {3, {5, 4}}, {4, {7, 4}}};
}

inline Drawing k5_one_crossing() {
  return drawing_from_polylines(Multigraph::complete(5), k5_positions());
}

// a(0,0) b(10,0) c(0,10) d(10,10). e0 = ad and e1 = bc cross once; e2 = ab
// bends out to (12,2) and crosses e1 once near b.
inline Drawing adjacent_crossing_example() {
  Multigraph g({0, 1, 2, 3}, {{0, 0, 3}, {1, 1, 2}, {2, 0, 1}});
  return drawing_from_polylines(g, {{0, {0, 0}}, {1, {10, 0}}, {2, {0, 10}}, {3, {10, 10}}},
                                {{2, {{12, 2}}}});
}

// Two edges crossing twice: a horizontal segment and a V-shaped polyline.
inline Drawing double_crossed_pair() {
  Multigraph g({0, 1, 2, 3}, {{0, 0, 1}, {1, 2, 3}});
  return drawing_from_polylines(g, {{0, {0, 0}}, {1, {10, 0}}, {2, {2, 5}}, {3, {8, 5}}},
                                {{1, {{5, -5}}}});
}

// One loop at vertex 0 drawn as a figure eight, so it crosses itself once.
inline Drawing figure_eight_loop() {
  Multigraph g({0}, {{0, 0, 0}});
  return drawing_from_polylines(g, {{0, {0, 0}}}, {{0, {{10, 10}, {10, 0}, {0, 10}}}});
}

}  // namespace fixtures
