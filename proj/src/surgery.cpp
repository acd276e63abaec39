#include "oddplanar/surgery.hpp"

#include <algorithm>

#include "detail/map_editor.hpp"
#include "oddplanar/validate.hpp"

namespace oddplanar {

Drawing remove_edges(const Drawing& d, const std::set<EdgeId>& removed) {
  for (EdgeId e : removed) {
    if (!d.graph().has_edge(e)) throw Error(ErrorKind::UnknownEdge, "edge " + std::to_string(e));
  }
  if (removed.empty()) return d;
  detail::MapEditor ed(d);
  std::vector<NodeId> touched;
  for (EdgeId e : removed) {
    for (DartId x : d.path(e)) {
      const NodeId at = d.dart(d.dart(x).twin).node;
      if (d.is_crossing(at)) touched.push_back(at);
    }
  }
  std::sort(touched.begin(), touched.end());
  touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
  for (NodeId c : touched) {
    const auto rot = ed.nodes[c].rotation;
    const bool gone_a = removed.count(ed.darts[rot[0]].edge) > 0;
    const bool gone_b = removed.count(ed.darts[rot[1]].edge) > 0;
    if (gone_a && !gone_b) ed.join_arms(rot[1], rot[3]);
    if (gone_b && !gone_a) ed.join_arms(rot[0], rot[2]);
    ed.drop_node(c);
  }
  for (EdgeId e : removed) {
    for (DartId x : d.path(e)) {
      const DartId t = d.dart(x).twin;
      if (!d.is_crossing(d.dart(x).node)) ed.drop_dart(x);
      if (!d.is_crossing(d.dart(t).node)) ed.drop_dart(t);
    }
    ed.remove_edge_record(e);
  }
  return ed.finish();
}

Drawing induced_subdrawing(const Drawing& d, const std::set<VertexId>& vs) {
  for (VertexId v : vs) {
    if (!d.graph().has_vertex(v)) {
      throw Error(ErrorKind::UnknownVertex, "vertex " + std::to_string(v));
    }
  }
  std::set<EdgeId> drop;
  for (const Edge& e : d.graph().edges()) {
    if (!vs.count(e.u) || !vs.count(e.v)) drop.insert(e.id);
  }
  const Drawing reduced = remove_edges(d, drop);
  if (vs.size() == reduced.graph().vertex_count()) return reduced;
  detail::MapEditor ed(reduced);
  for (VertexId v : reduced.graph().vertices()) {
    if (!vs.count(v)) ed.remove_vertex(v);
  }
  return ed.finish();
}

Drawing shift_ids(const Drawing& d, VertexId dv, EdgeId de) {
  std::vector<VertexId> vs;
  for (VertexId v : d.graph().vertices()) vs.push_back(v + dv);
  std::vector<Edge> es;
  for (const Edge& e : d.graph().edges()) es.push_back({e.id + de, e.u + dv, e.v + dv});
  std::vector<MapNode> nodes(d.nodes().begin(), d.nodes().end());
  for (MapNode& n : nodes) {
    if (n.kind == NodeKind::Vertex) n.vertex += dv;
  }
  std::vector<MapDart> darts(d.darts().begin(), d.darts().end());
  for (MapDart& x : darts) x.edge += de;
  std::vector<std::vector<DartId>> paths(d.paths().begin(), d.paths().end());
  return Drawing(Multigraph(std::move(vs), std::move(es)), std::move(nodes), std::move(darts),
                 std::move(paths));
}

Drawing overlay_disjoint(const Drawing& d1, const Drawing& d2) {
  std::vector<VertexId> vs(d1.graph().vertices().begin(), d1.graph().vertices().end());
  for (VertexId v : d2.graph().vertices()) {
    if (d1.graph().has_vertex(v)) throw Error(ErrorKind::InvalidArgument, "vertex ids clash");
    vs.push_back(v);
  }
  std::vector<Edge> es(d1.graph().edges().begin(), d1.graph().edges().end());
  for (const Edge& e : d2.graph().edges()) {
    if (d1.graph().has_edge(e.id)) throw Error(ErrorKind::InvalidArgument, "edge ids clash");
    es.push_back(e);
  }
  const auto node_off = static_cast<NodeId>(d1.nodes().size());
  const auto dart_off = static_cast<DartId>(d1.darts().size());
  std::vector<MapNode> nodes(d1.nodes().begin(), d1.nodes().end());
  for (MapNode n : d2.nodes()) {
    for (DartId& x : n.rotation) x += dart_off;
    nodes.push_back(std::move(n));
  }
  std::vector<MapDart> darts(d1.darts().begin(), d1.darts().end());
  for (MapDart x : d2.darts()) {
    darts.push_back({x.twin + dart_off, x.node + node_off, x.edge});
  }
  Multigraph g(std::move(vs), std::move(es));
  std::vector<std::vector<DartId>> paths;
  for (const Edge& e : g.edges()) {
    if (d1.graph().has_edge(e.id)) {
      auto p = d1.path(e.id);
      paths.emplace_back(p.begin(), p.end());
    } else {
      std::vector<DartId> p;
      for (DartId x : d2.path(e.id)) p.push_back(x + dart_off);
      paths.push_back(std::move(p));
    }
  }
  return Drawing(std::move(g), std::move(nodes), std::move(darts), std::move(paths)).canonical();
}

Drawing disjoint_union(const Drawing& d1, const Drawing& d2) {
  const VertexId dv = d2.graph().vertex_count() == 0 || d1.graph().vertex_count() == 0
                          ? 0
                          : d1.graph().max_vertex_id() + 1 - d2.graph().vertices().front();
  const EdgeId de = d2.graph().edge_count() == 0 || d1.graph().edge_count() == 0
                        ? 0
                        : d1.graph().max_edge_id() + 1 - d2.graph().edges().front().id;
  return overlay_disjoint(d1, shift_ids(d2, dv, de));
}

}  // namespace oddplanar
