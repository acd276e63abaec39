#include "oddplanar/drawing.hpp"

#include <algorithm>
#include <numeric>

namespace oddplanar {

Drawing::Drawing(Multigraph graph, std::vector<MapNode> nodes, std::vector<MapDart> darts,
                 std::vector<std::vector<DartId>> paths)
    : graph_(std::move(graph)),
      nodes_(std::move(nodes)),
      darts_(std::move(darts)),
      paths_(std::move(paths)) {
  paths_.resize(graph_.edge_count());
  index();
}

Drawing Drawing::empty(const std::vector<VertexId>& vertices) {
  Multigraph g(vertices, {});
  std::vector<MapNode> nodes;
  for (VertexId v : g.vertices()) nodes.push_back({NodeKind::Vertex, v, {}});
  return Drawing(std::move(g), std::move(nodes), {}, {});
}

void Drawing::index() {
  vertex_node_.assign(graph_.vertex_count(), kNone);
  for (std::size_t n = 0; n < nodes_.size(); ++n) {
    if (nodes_[n].kind != NodeKind::Vertex) continue;
    if (auto i = graph_.vertex_index(nodes_[n].vertex); i && vertex_node_[*i] == kNone) {
      vertex_node_[*i] = static_cast<NodeId>(n);
    }
  }
  position_.assign(darts_.size(), kNone);
  for (std::size_t n = 0; n < nodes_.size(); ++n) {
    const auto& rot = nodes_[n].rotation;
    for (std::size_t i = 0; i < rot.size(); ++i) {
      DartId d = rot[i];
      if (d >= 0 && static_cast<std::size_t>(d) < darts_.size() && position_[d] == kNone) {
        position_[static_cast<std::size_t>(d)] = static_cast<int>(i);
      }
    }
  }
}

std::span<const DartId> Drawing::path(EdgeId e) const {
  auto i = graph_.edge_index(e);
  if (!i) throw Error(ErrorKind::UnknownEdge, "edge " + std::to_string(e));
  return paths_[*i];
}

NodeId Drawing::vertex_node(VertexId v) const {
  auto i = graph_.vertex_index(v);
  return i ? vertex_node_[*i] : kNone;
}

DartId Drawing::rotation_next(DartId d) const {
  const auto& rot = node(dart(d).node).rotation;
  return rot[(static_cast<std::size_t>(position(d)) + 1) % rot.size()];
}

DartId Drawing::rotation_prev(DartId d) const {
  const auto& rot = node(dart(d).node).rotation;
  return rot[(static_cast<std::size_t>(position(d)) + rot.size() - 1) % rot.size()];
}

DartId Drawing::opposite(DartId d) const {
  const auto& rot = node(dart(d).node).rotation;
  return rot[(static_cast<std::size_t>(position(d)) + 2) % rot.size()];
}

std::size_t Drawing::crossing_node_count() const {
  return static_cast<std::size_t>(std::count_if(
      nodes_.begin(), nodes_.end(), [](const MapNode& n) { return n.kind == NodeKind::Crossing; }));
}

std::vector<std::vector<DartId>> Drawing::faces() const {
  std::vector<char> seen(darts_.size(), 0);
  std::vector<std::vector<DartId>> out;
  for (DartId d = 0; d < static_cast<DartId>(darts_.size()); ++d) {
    if (seen[d]) continue;
    std::vector<DartId> face;
    DartId x = d;
    while (!seen[x]) {
      seen[x] = 1;
      face.push_back(x);
      x = face_next(x);
    }
    out.push_back(std::move(face));
  }
  return out;
}

std::vector<std::vector<NodeId>> Drawing::map_components() const {
  std::vector<NodeId> parent(nodes_.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](NodeId x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const MapDart& d : darts_) {
    if (d.node == kNone || d.twin == kNone) continue;
    NodeId a = find(d.node);
    NodeId b = find(dart(d.twin).node);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::vector<NodeId>> out;
  std::vector<int> slot(nodes_.size(), -1);
  for (NodeId n = 0; n < static_cast<NodeId>(nodes_.size()); ++n) {
    NodeId r = find(n);
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[static_cast<std::size_t>(slot[r])].push_back(n);
  }
  return out;
}

Ending Drawing::ending_of(DartId d) const {
  const MapDart& md = dart(d);
  const Edge& e = graph_.edge(md.edge);
  if (!e.is_loop()) {
    VertexId at = node(md.node).vertex;
    return {e.id, static_cast<std::uint8_t>(at == e.u ? 0 : 1)};
  }
  auto p = path(e.id);
  return {e.id, static_cast<std::uint8_t>(!p.empty() && p.front() == d ? 0 : 1)};
}

std::vector<Ending> Drawing::endings_at(VertexId v) const {
  NodeId n = vertex_node(v);
  if (n == kNone) throw Error(ErrorKind::UnknownVertex, "vertex " + std::to_string(v));
  std::vector<Ending> out;
  for (DartId d : node(n).rotation) out.push_back(ending_of(d));
  return out;
}

Drawing Drawing::canonical(std::vector<NodeId>* node_map_out) const {
  const std::size_t nd = darts_.size();
  std::vector<NodeId> node_map(nodes_.size(), kNone);
  std::vector<DartId> dart_map(nd, kNone);
  std::vector<MapNode> new_nodes;
  for (VertexId v : graph_.vertices()) {
    NodeId n = vertex_node(v);
    if (n == kNone) throw Error(ErrorKind::InvalidDrawing, "vertex without node");
    node_map[n] = static_cast<NodeId>(new_nodes.size());
    new_nodes.push_back({NodeKind::Vertex, v, {}});
  }
  std::vector<MapDart> new_darts;
  std::vector<std::vector<DartId>> new_paths(graph_.edge_count());
  auto bad = [](const char* why) { return Error(ErrorKind::InvalidDrawing, why); };
  for (std::size_t i = 0; i < graph_.edge_count(); ++i) {
    if (paths_[i].empty()) throw bad("edge without path");
    EdgeId eid = graph_.edges()[i].id;
    DartId d = paths_[i].front();
    for (std::size_t steps = 0;; ++steps) {
      if (steps > nd || d < 0 || static_cast<std::size_t>(d) >= nd) throw bad("path walk diverged");
      if (dart_map[d] != kNone) throw bad("segment used twice");
      DartId t = darts_[d].twin;
      if (t < 0 || static_cast<std::size_t>(t) >= nd || dart_map[t] != kNone) {
        throw bad("broken twin");
      }
      DartId out_id = static_cast<DartId>(new_darts.size());
      dart_map[d] = out_id;
      dart_map[t] = out_id + 1;
      new_paths[i].push_back(out_id);
      NodeId at = darts_[t].node;
      if (at < 0 || static_cast<std::size_t>(at) >= nodes_.size()) throw bad("dart without node");
      if (node_map[at] == kNone) {
        node_map[at] = static_cast<NodeId>(new_nodes.size());
        new_nodes.push_back({NodeKind::Crossing, kNone, {}});
      }
      new_darts.push_back({out_id + 1, node_map[darts_[d].node], eid});
      new_darts.push_back({out_id, node_map[at], eid});
      if (nodes_[at].kind == NodeKind::Vertex) break;
      if (nodes_[at].rotation.size() != 4 || position(t) == kNone) throw bad("bad crossing node");
      d = opposite(t);
    }
  }
  for (std::size_t n = 0; n < nodes_.size(); ++n) {
    if (node_map[n] == kNone) continue;
    auto& rot = new_nodes[node_map[n]].rotation;
    for (DartId d : nodes_[n].rotation) {
      if (d < 0 || static_cast<std::size_t>(d) >= nd || dart_map[d] == kNone) {
        throw bad("rotation holds a dart outside every path");
      }
      rot.push_back(dart_map[d]);
    }
    if (!rot.empty()) std::rotate(rot.begin(), std::min_element(rot.begin(), rot.end()), rot.end());
  }
  if (node_map_out) *node_map_out = node_map;
  return Drawing(graph_, std::move(new_nodes), std::move(new_darts), std::move(new_paths));
}

bool Drawing::operator==(const Drawing& other) const {
  return graph_ == other.graph_ && nodes_ == other.nodes_ && darts_ == other.darts_ &&
         paths_ == other.paths_;
}

}  // namespace oddplanar
