#pragma once

#include <vector>

#include "oddplanar/drawing.hpp"

namespace oddplanar::detail {

/// One node on an edge path. `in_slot` / `out_slot` are rotation positions
/// at that node; the first step has no in-slot and the last no out-slot.
struct PathStep {
  NodeId node = kNone;
  int in_slot = -1;
  int out_slot = -1;
};

/// Builds a planarization from explicit rotation slots: every node has a
/// fixed number of slots, and each edge path fills one slot per visit.
class SlotBuilder {
 public:
  explicit SlotBuilder(Multigraph graph);

  NodeId vertex_node(VertexId v) const;
  void set_slots(NodeId n, int count);
  NodeId add_crossing();
  void set_path(EdgeId e, std::vector<PathStep> steps);
  /// Throws Error(InvalidDrawing) if a slot is left empty or filled twice.
  Drawing build() const;

 private:
  Multigraph graph_;
  std::vector<MapNode> nodes_;
  std::vector<int> slots_;
  std::vector<std::vector<PathStep>> paths_;
};

}  // namespace oddplanar::detail
