#pragma once

#include <vector>

#include "oddplanar/contraction.hpp"
#include "oddplanar/drawing.hpp"
#include "oddplanar/lemma1.hpp"
#include "oddplanar/parity.hpp"

namespace oddplanar {

/// Greedy maximal forest (edges in id order) whose edges pairwise cross
/// evenly. Every edge left out either closes a cycle in the forest or
/// crosses some forest edge oddly.
std::vector<EdgeId> max_even_forest(const Drawing& d);

struct ComponentTrace {
  std::vector<VertexId> vertices;      // V_i
  std::size_t edge_count = 0;          // m_i
  VertexId root = kNone;
  std::vector<EdgeId> tree_edges;      // F_i in contraction order
  std::vector<SplitRecord> splits;     // same order as tree_edges
  OneVertexSketch contracted;          // the component after contraction
  /// Stored parities of the contracted sketch agree with the interleaving of
  /// its endings. Always true for sketches coming from real drawings.
  bool parity_matches_rotation = true;
  Drawing redrawn;                     // one-vertex redrawing
};

struct PipelineTrace {
  int k = 0;
  std::vector<EdgeId> forest;          // F
  std::vector<EdgeId> removed;         // edges crossing F oddly
  Drawing reduced;                     // G1
  ParitySketch reduced_sketch;         // parity sketch of G1
  std::vector<ComponentTrace> components;
  Drawing result;                      // G4
};

/// Turns a k-odd-plane drawing into a k-plane drawing of the graph left after
/// deleting every edge that crosses the even forest oddly (at most k(n-1)
/// edges). In the result, pairs that crossed an odd number of times cross
/// once and all other pairs do not cross; every rotation is kept.
/// Throws Error(NotKOddPlane) or Error(InvalidArgument) for non-simple input.
PipelineTrace theorem2_transform(const Drawing& d, int k);

/// Crossing-free drawing of a graph given a drawing where every pair of edges
/// crosses evenly. Throws Error(OddPairPresent) otherwise.
Drawing hanani_tutte_embed(const Drawing& d);

}  // namespace oddplanar
