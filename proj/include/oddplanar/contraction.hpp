#pragma once

#include <utility>
#include <vector>

#include "oddplanar/drawing.hpp"
#include "oddplanar/parity.hpp"

namespace oddplanar {

/// Enough to undo one contraction. The merged vertex keeps the id of `u`.
struct SplitRecord {
  VertexId merged = kNone;   // w
  VertexId u = kNone;
  VertexId v = kNone;
  Edge contracted;           // original record of the contracted edge
  std::vector<Ending> u_block;  // e1..ea, clockwise after e at u
  std::vector<Ending> v_block;  // f1..fb, clockwise after e at v

  bool operator==(const SplitRecord&) const = default;
};

/// Contracts the even edge `e` into its endpoint `target`. The merged
/// vertex's rotation is u's rotation after e followed by v's rotation after e;
/// every other rotation and all parities of the surviving edges are kept.
/// Throws Error(ContractOddEdge), Error(ContractLoop), Error(UnknownEdge).
std::pair<ParitySketch, SplitRecord> contract_even_edge(const ParitySketch& sketch, EdgeId e,
                                                        VertexId target);

/// Replaces the merged vertex by two nearby vertices joined by the restored
/// edge, which is drawn without crossings. Nothing else changes.
/// Throws Error(InconsistentSplit) if the merged rotation is not the two
/// recorded blocks back to back.
Drawing split_vertex(const Drawing& d, const SplitRecord& record);

/// Inverse of `contract_even_edge` on sketches: restores rotation and the
/// contracted edge, which is even with everything.
ParitySketch split_sketch(const ParitySketch& sketch, const SplitRecord& record);

}  // namespace oddplanar
