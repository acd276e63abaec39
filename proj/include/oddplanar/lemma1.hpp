#pragma once

#include <vector>

#include "oddplanar/drawing.hpp"

namespace oddplanar {

/// A one-vertex multigraph given only by its rotation: every edge is a loop
/// at `vertex`, listed twice in `rotation` (clockwise).
///
/// The reference ray sits in the gap just before `rotation[reference_gap]`,
/// the smallest ending. Reading clockwise from that gap, the first ending of a
/// loop met is its "minus" ending and the second its "plus" ending.
struct OneVertexSketch {
  VertexId vertex = 0;
  std::vector<EdgeId> loops;      // sorted
  std::vector<Ending> rotation;   // 2 * loops.size() endings
  int reference_gap = 0;

  /// Derives `loops` and `reference_gap` from the rotation.
  static OneVertexSketch from_rotation(VertexId vertex, std::vector<Ending> rotation);
  /// Throws Error(MalformedSketch).
  void check() const;
  /// Crossing parity forced on two of the loops by the rotation.
  bool odd(EdgeId e, EdgeId f) const;
};

/// Redraws a one-vertex sketch with the same rotation so that interleaved
/// loops cross exactly once, nested or disjoint loops do not cross, and no
/// loop crosses itself.
///
/// Loops are peeled off one at a time, always taking the smallest-id loop with
/// no other remaining loop nested inside its clockwise span. Re-inserting them
/// in reverse, each loop runs out along its minus ending, sweeps clockwise
/// close to the vertex and returns along its plus ending, so it crosses the
/// endings that lie inside its span and nothing else. Later insertions hug the
/// vertex more tightly, which fixes the crossing order along every loop.
Drawing lemma1_redraw(const OneVertexSketch& sketch);

/// Smooths every self-crossing so that each edge stays a single curve.
/// Crossing counts between distinct edges and real-vertex rotations are kept.
Drawing remove_self_crossings(const Drawing& d);

}  // namespace oddplanar
