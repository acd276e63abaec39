#pragma once

#include <span>
#include <vector>

#include "oddplanar/ids.hpp"
#include "oddplanar/multigraph.hpp"

namespace oddplanar {

enum class NodeKind : std::uint8_t { Vertex, Crossing };

struct MapNode {
  NodeKind kind = NodeKind::Vertex;
  VertexId vertex = kNone;        // kNone for crossing nodes
  std::vector<DartId> rotation;   // clockwise

  bool operator==(const MapNode&) const = default;
};

/// Half of a map segment. `node` is the node whose rotation holds the dart.
struct MapDart {
  DartId twin = kNone;
  NodeId node = kNone;
  EdgeId edge = kNone;

  bool operator==(const MapDart&) const = default;
};

/// A drawing of a multigraph on the sphere, stored as its planarization: a
/// combinatorial map whose nodes are the real vertices plus one degree-4 node
/// per crossing. Each edge maps to the sequence of darts leaving the nodes of
/// its path, running from end 0 to end 1.
///
/// Drawings are values. Operations never mutate; they build new drawings,
/// normally in canonical numbering (see `canonical()`).
class Drawing {
 public:
  Drawing() = default;
  /// Raw constructor, no validation. `paths` is indexed like `graph.edges()`.
  Drawing(Multigraph graph, std::vector<MapNode> nodes, std::vector<MapDart> darts,
          std::vector<std::vector<DartId>> paths);

  /// Crossing-free drawing of isolated vertices only.
  static Drawing empty(const std::vector<VertexId>& vertices = {});

  const Multigraph& graph() const { return graph_; }
  std::span<const MapNode> nodes() const { return nodes_; }
  std::span<const MapDart> darts() const { return darts_; }
  const MapNode& node(NodeId n) const { return nodes_[static_cast<std::size_t>(n)]; }
  const MapDart& dart(DartId d) const { return darts_[static_cast<std::size_t>(d)]; }
  std::span<const std::vector<DartId>> paths() const { return paths_; }
  /// Path of the edge with the given id. Throws Error(UnknownEdge).
  std::span<const DartId> path(EdgeId e) const;

  /// kNone if the vertex has no node.
  NodeId vertex_node(VertexId v) const;
  /// Index of `d` inside the rotation of its node, or kNone if it is not there.
  int position(DartId d) const { return position_[static_cast<std::size_t>(d)]; }
  /// Clockwise successor of `d` in its node's rotation.
  DartId rotation_next(DartId d) const;
  DartId rotation_prev(DartId d) const;
  /// The dart across a crossing node (the continuation of the same pass).
  DartId opposite(DartId d) const;

  std::size_t crossing_node_count() const;
  bool is_crossing(NodeId n) const { return node(n).kind == NodeKind::Crossing; }

  /// Face successor: the next dart around the face lying to the left of `d`.
  DartId face_next(DartId d) const { return rotation_next(dart(d).twin); }
  /// Faces as dart cycles, each starting at its smallest dart, ordered by it.
  std::vector<std::vector<DartId>> faces() const;
  /// Map-connected components as node lists (nodes sorted within each).
  std::vector<std::vector<NodeId>> map_components() const;

  /// Endings at a real vertex in clockwise order (loops give two endings).
  std::vector<Ending> endings_at(VertexId v) const;
  /// Ending carried by a dart that sits at a real vertex.
  Ending ending_of(DartId d) const;

  /// Renumbered copy: real nodes in vertex order, crossing nodes by first
  /// visit along the edge paths taken in edge order, darts in traversal
  /// order, each rotation starting at its smallest dart. Requires walkable
  /// paths; equal drawings have equal canonical forms.
  /// If `node_map` is given it receives, for every old node, its new id.
  Drawing canonical(std::vector<NodeId>* node_map = nullptr) const;

  bool operator==(const Drawing& other) const;

 private:
  void index();

  Multigraph graph_;
  std::vector<MapNode> nodes_;
  std::vector<MapDart> darts_;
  std::vector<std::vector<DartId>> paths_;
  std::vector<NodeId> vertex_node_;
  std::vector<int> position_;
};

}  // namespace oddplanar
