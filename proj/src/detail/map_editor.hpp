#pragma once

#include <map>
#include <vector>

#include "oddplanar/drawing.hpp"

namespace oddplanar::detail {

/// Mutable scratch copy of a planarization used by the surgery routines.
/// Removed nodes and darts are only flagged; `finish()` compacts, rebuilds
/// every path by walking from its start dart and returns the canonical form.
class MapEditor {
 public:
  explicit MapEditor(const Drawing& d);

  NodeId add_node(NodeKind kind, VertexId vertex);
  /// New dart owned by `node`; the caller places it in a rotation.
  DartId add_dart(NodeId node, EdgeId edge);
  void link(DartId a, DartId b);
  DartId twin(DartId d) const { return darts[d].twin; }
  NodeId node_of(DartId d) const { return darts[d].node; }
  int pos(DartId d) const;
  DartId opposite(DartId d) const;
  NodeId vertex_node(VertexId v) const;

  /// Treats arms `a` and `b` of one node as a single strand and removes the
  /// node-side ends: twin(a) and twin(b) become twins.
  void join_arms(DartId a, DartId b);
  /// Removes `d` from its rotation and flags it dead.
  void drop_dart(DartId d);
  void drop_node(NodeId n);
  /// Replaces `old_dart` by `new_dart` at the same rotation position.
  void replace_in_rotation(DartId old_dart, DartId new_dart);
  void insert_after(DartId anchor, DartId d);

  /// Path of an edge as out-darts, walked from its start dart.
  std::vector<DartId> walk(EdgeId e) const;

  void remove_edge_record(EdgeId e);
  void add_edge_record(const Edge& e, DartId start_dart);
  void remove_vertex(VertexId v);
  void add_vertex(VertexId v, NodeId node);

  /// `node_map`, if given, maps editor node ids to ids in the result.
  Drawing finish(std::vector<NodeId>* node_map = nullptr) const;

  std::vector<VertexId> vertices;
  std::vector<Edge> edges;
  std::vector<MapNode> nodes;
  std::vector<MapDart> darts;
  std::vector<char> node_dead;
  std::vector<char> dart_dead;
  std::map<EdgeId, DartId> start;
};

}  // namespace oddplanar::detail
