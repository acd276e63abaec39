#pragma once

#include <cstdint>
#include <vector>

#include "oddplanar/construct.hpp"
#include "oddplanar/drawing.hpp"

namespace oddplanar {

enum class RandomModel { Convex, PerturbedEven };

const char* to_string(RandomModel m);

/// Straight-line drawing with the vertices in convex position, placed along
/// the arc of a parabola in the given order. Crossings are found with exact
/// integer arithmetic. When three chords meet in a point the positions are
/// nudged by a deterministic sequence of offsets until they do not.
Drawing convex_drawing(const Multigraph& g, const std::vector<VertexId>& order);

struct RandomDrawing {
  Drawing drawing;
  /// Moves applied on top of the starting drawing (perturbed-even only).
  Drawing start;
  std::vector<DoubleCrossingMove> moves;
};

/// Seeded test input.
///
/// Convex: convex_drawing with a seeded vertex order.
/// PerturbedEven: a planar embedding of g (or, for a nonplanar g, its convex
/// drawing in id order) followed by `moves` seeded double-crossing moves, so
/// every pair keeps the parity it had in the starting drawing.
/// Output depends only on (g, seed, model, moves).
RandomDrawing random_drawing_ex(const Multigraph& g, std::uint64_t seed, RandomModel model,
                                int moves = 3);
inline Drawing random_drawing(const Multigraph& g, std::uint64_t seed, RandomModel model,
                              int moves = 3) {
  return random_drawing_ex(g, seed, model, moves).drawing;
}

/// Seeded simple graph on vertices 0..n-1 with `m` edges chosen uniformly.
Multigraph random_graph(int n, int m, std::uint64_t seed);

/// Seeded planar graph: random edges added in a seeded order while the graph
/// stays planar, up to `m` edges (fewer if the graph saturates).
Multigraph random_planar_graph(int n, int m, std::uint64_t seed);

}  // namespace oddplanar
