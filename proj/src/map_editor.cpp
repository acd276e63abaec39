#include "detail/map_editor.hpp"

#include <algorithm>

namespace oddplanar::detail {

MapEditor::MapEditor(const Drawing& d)
    : vertices(d.graph().vertices().begin(), d.graph().vertices().end()),
      edges(d.graph().edges().begin(), d.graph().edges().end()),
      nodes(d.nodes().begin(), d.nodes().end()),
      darts(d.darts().begin(), d.darts().end()),
      node_dead(nodes.size(), 0),
      dart_dead(darts.size(), 0) {
  for (std::size_t i = 0; i < edges.size(); ++i) {
    start[edges[i].id] = d.paths()[i].front();
  }
}

NodeId MapEditor::add_node(NodeKind kind, VertexId vertex) {
  nodes.push_back({kind, vertex, {}});
  node_dead.push_back(0);
  return static_cast<NodeId>(nodes.size() - 1);
}

DartId MapEditor::add_dart(NodeId node, EdgeId edge) {
  darts.push_back({kNone, node, edge});
  dart_dead.push_back(0);
  return static_cast<DartId>(darts.size() - 1);
}

void MapEditor::link(DartId a, DartId b) {
  darts[a].twin = b;
  darts[b].twin = a;
}

int MapEditor::pos(DartId d) const {
  const auto& rot = nodes[darts[d].node].rotation;
  auto it = std::find(rot.begin(), rot.end(), d);
  if (it == rot.end()) throw Error(ErrorKind::InvalidDrawing, "dart missing from rotation");
  return static_cast<int>(it - rot.begin());
}

DartId MapEditor::opposite(DartId d) const {
  const auto& rot = nodes[darts[d].node].rotation;
  if (rot.size() != 4) throw Error(ErrorKind::InvalidDrawing, "opposite on a non-crossing node");
  return rot[(static_cast<std::size_t>(pos(d)) + 2) % 4];
}

NodeId MapEditor::vertex_node(VertexId v) const {
  for (std::size_t n = 0; n < nodes.size(); ++n) {
    if (!node_dead[n] && nodes[n].kind == NodeKind::Vertex && nodes[n].vertex == v) {
      return static_cast<NodeId>(n);
    }
  }
  return kNone;
}

void MapEditor::join_arms(DartId a, DartId b) {
  const DartId ta = twin(a);
  const DartId tb = twin(b);
  if (ta == b) {
    // The strand closes on itself through this node only.
    dart_dead[a] = dart_dead[b] = 1;
    return;
  }
  link(ta, tb);
  darts[a].twin = darts[b].twin = kNone;
  dart_dead[a] = dart_dead[b] = 1;
}

void MapEditor::drop_dart(DartId d) {
  auto& rot = nodes[darts[d].node].rotation;
  rot.erase(std::remove(rot.begin(), rot.end(), d), rot.end());
  dart_dead[d] = 1;
}

void MapEditor::drop_node(NodeId n) {
  for (DartId d : nodes[n].rotation) dart_dead[d] = 1;
  nodes[n].rotation.clear();
  node_dead[n] = 1;
}

void MapEditor::replace_in_rotation(DartId old_dart, DartId new_dart) {
  auto& rot = nodes[darts[old_dart].node].rotation;
  *std::find(rot.begin(), rot.end(), old_dart) = new_dart;
  darts[new_dart].node = darts[old_dart].node;
}

void MapEditor::insert_after(DartId anchor, DartId d) {
  auto& rot = nodes[darts[anchor].node].rotation;
  rot.insert(rot.begin() + pos(anchor) + 1, d);
  darts[d].node = darts[anchor].node;
}

std::vector<DartId> MapEditor::walk(EdgeId e) const {
  std::vector<DartId> out;
  DartId d = start.at(e);
  for (std::size_t steps = 0; steps <= darts.size(); ++steps) {
    out.push_back(d);
    const DartId t = twin(d);
    if (nodes[node_of(t)].kind == NodeKind::Vertex) return out;
    d = opposite(t);
  }
  throw Error(ErrorKind::InvalidDrawing, "edge walk does not terminate");
}

void MapEditor::remove_edge_record(EdgeId e) {
  edges.erase(std::remove_if(edges.begin(), edges.end(), [&](const Edge& x) { return x.id == e; }),
              edges.end());
  start.erase(e);
}

void MapEditor::add_edge_record(const Edge& e, DartId start_dart) {
  edges.push_back(e);
  start[e.id] = start_dart;
}

void MapEditor::remove_vertex(VertexId v) {
  const NodeId n = vertex_node(v);
  if (n != kNone) drop_node(n);
  vertices.erase(std::remove(vertices.begin(), vertices.end(), v), vertices.end());
}

void MapEditor::add_vertex(VertexId v, NodeId node) {
  vertices.push_back(v);
  nodes[node].vertex = v;
}

Drawing MapEditor::finish(std::vector<NodeId>* node_map_out) const {
  Multigraph g(vertices, edges);
  std::vector<NodeId> node_map(nodes.size(), kNone);
  std::vector<DartId> dart_map(darts.size(), kNone);
  std::vector<MapNode> out_nodes;
  std::vector<MapDart> out_darts;
  for (std::size_t n = 0; n < nodes.size(); ++n) {
    if (node_dead[n]) continue;
    node_map[n] = static_cast<NodeId>(out_nodes.size());
    out_nodes.push_back({nodes[n].kind, nodes[n].vertex, {}});
  }
  for (std::size_t d = 0; d < darts.size(); ++d) {
    if (dart_dead[d]) continue;
    dart_map[d] = static_cast<DartId>(out_darts.size());
    out_darts.push_back({});
  }
  for (std::size_t d = 0; d < darts.size(); ++d) {
    if (dart_dead[d]) continue;
    const MapDart& src = darts[d];
    if (src.twin == kNone || dart_dead[src.twin] || node_dead[src.node]) {
      throw Error(ErrorKind::InvalidDrawing, "surgery left a dangling dart");
    }
    out_darts[dart_map[d]] = {dart_map[src.twin], node_map[src.node], src.edge};
  }
  for (std::size_t n = 0; n < nodes.size(); ++n) {
    if (node_dead[n]) continue;
    for (DartId d : nodes[n].rotation) out_nodes[node_map[n]].rotation.push_back(dart_map[d]);
  }
  std::vector<std::vector<DartId>> paths;
  for (const Edge& e : g.edges()) paths.push_back({dart_map[start.at(e.id)]});
  std::vector<NodeId> canon;
  Drawing out = Drawing(std::move(g), std::move(out_nodes), std::move(out_darts), std::move(paths))
                    .canonical(&canon);
  if (node_map_out) {
    node_map_out->assign(nodes.size(), kNone);
    for (std::size_t n = 0; n < nodes.size(); ++n) {
      if (node_map[n] != kNone) (*node_map_out)[n] = canon[node_map[n]];
    }
  }
  return out;
}

}  // namespace oddplanar::detail
