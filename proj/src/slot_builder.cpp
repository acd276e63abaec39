#include "detail/slot_builder.hpp"

namespace oddplanar::detail {

SlotBuilder::SlotBuilder(Multigraph graph) : graph_(std::move(graph)) {
  for (VertexId v : graph_.vertices()) {
    nodes_.push_back({NodeKind::Vertex, v, {}});
    slots_.push_back(0);
  }
  paths_.resize(graph_.edge_count());
}

NodeId SlotBuilder::vertex_node(VertexId v) const {
  auto i = graph_.vertex_index(v);
  if (!i) throw Error(ErrorKind::UnknownVertex, "vertex " + std::to_string(v));
  return static_cast<NodeId>(*i);
}

void SlotBuilder::set_slots(NodeId n, int count) { slots_[n] = count; }

NodeId SlotBuilder::add_crossing() {
  nodes_.push_back({NodeKind::Crossing, kNone, {}});
  slots_.push_back(4);
  return static_cast<NodeId>(nodes_.size() - 1);
}

void SlotBuilder::set_path(EdgeId e, std::vector<PathStep> steps) {
  auto i = graph_.edge_index(e);
  if (!i) throw Error(ErrorKind::UnknownEdge, "edge " + std::to_string(e));
  paths_[*i] = std::move(steps);
}

Drawing SlotBuilder::build() const {
  std::vector<MapNode> nodes = nodes_;
  for (std::size_t n = 0; n < nodes.size(); ++n) nodes[n].rotation.assign(slots_[n], kNone);
  std::vector<MapDart> darts;
  std::vector<std::vector<DartId>> paths(graph_.edge_count());
  auto place = [&](NodeId n, int slot, DartId d) {
    if (slot < 0 || slot >= slots_[n] || nodes[n].rotation[slot] != kNone) {
      throw Error(ErrorKind::InvalidDrawing, "slot conflict at node " + std::to_string(n));
    }
    nodes[n].rotation[slot] = d;
  };
  for (std::size_t i = 0; i < graph_.edge_count(); ++i) {
    const EdgeId e = graph_.edges()[i].id;
    const auto& steps = paths_[i];
    if (steps.size() < 2) throw Error(ErrorKind::InvalidDrawing, "edge without path");
    for (std::size_t k = 0; k + 1 < steps.size(); ++k) {
      const auto a = static_cast<DartId>(darts.size());
      darts.push_back({a + 1, steps[k].node, e});
      darts.push_back({a, steps[k + 1].node, e});
      place(steps[k].node, steps[k].out_slot, a);
      place(steps[k + 1].node, steps[k + 1].in_slot, a + 1);
      paths[i].push_back(a);
    }
  }
  for (std::size_t n = 0; n < nodes.size(); ++n) {
    for (DartId d : nodes[n].rotation) {
      if (d == kNone) throw Error(ErrorKind::InvalidDrawing, "unfilled slot");
    }
  }
  return Drawing(graph_, std::move(nodes), std::move(darts), std::move(paths)).canonical();
}

}  // namespace oddplanar::detail
