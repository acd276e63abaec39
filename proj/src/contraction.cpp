#include "oddplanar/contraction.hpp"

#include <algorithm>

#include "detail/map_editor.hpp"

namespace oddplanar {

namespace {

// Clockwise endings after `pivot`, pivot excluded.
std::vector<Ending> after(const std::vector<Ending>& rot, const Ending& pivot) {
  auto it = std::find(rot.begin(), rot.end(), pivot);
  if (it == rot.end()) throw Error(ErrorKind::MalformedSketch, "contracted ending not found");
  std::vector<Ending> out(it + 1, rot.end());
  out.insert(out.end(), rot.begin(), it);
  return out;
}

// True when `rot` is, cyclically, exactly `first` followed by `second`.
bool cyclic_concat(const std::vector<Ending>& rot, const std::vector<Ending>& first,
                   const std::vector<Ending>& second) {
  std::vector<Ending> want(first);
  want.insert(want.end(), second.begin(), second.end());
  if (want.size() != rot.size()) return false;
  if (want.empty()) return true;
  auto it = std::find(rot.begin(), rot.end(), want.front());
  if (it == rot.end()) return false;
  const auto offset = static_cast<std::size_t>(it - rot.begin());
  for (std::size_t i = 0; i < want.size(); ++i) {
    if (rot[(offset + i) % rot.size()] != want[i]) return false;
  }
  return true;
}

}  // namespace

std::pair<ParitySketch, SplitRecord> contract_even_edge(const ParitySketch& sketch, EdgeId e,
                                                        VertexId target) {
  const Edge& edge = sketch.graph.edge(e);
  if (edge.is_loop()) throw Error(ErrorKind::ContractLoop, "edge " + std::to_string(e));
  if (target != edge.u && target != edge.v) {
    throw Error(ErrorKind::InvalidArgument, "target is not an endpoint of the edge");
  }
  if (!sketch.is_even_edge(e)) throw Error(ErrorKind::ContractOddEdge, "edge " + std::to_string(e));
  const VertexId u = target;
  const VertexId v = target == edge.u ? edge.v : edge.u;
  const auto u_end = static_cast<std::uint8_t>(edge.u == u ? 0 : 1);

  SplitRecord rec;
  rec.merged = u;
  rec.u = u;
  rec.v = v;
  rec.contracted = edge;
  rec.u_block = after(sketch.rotation_at(u), {e, u_end});
  rec.v_block = after(sketch.rotation_at(v), {e, static_cast<std::uint8_t>(1 - u_end)});

  std::vector<VertexId> vs;
  std::vector<std::vector<Ending>> rotation;
  for (std::size_t i = 0; i < sketch.graph.vertex_count(); ++i) {
    const VertexId x = sketch.graph.vertices()[i];
    if (x == v) continue;
    vs.push_back(x);
    if (x == u) {
      std::vector<Ending> merged(rec.u_block);
      merged.insert(merged.end(), rec.v_block.begin(), rec.v_block.end());
      rotation.push_back(std::move(merged));
    } else {
      rotation.push_back(sketch.rotation[i]);
    }
  }
  std::vector<Edge> es;
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < sketch.graph.edge_count(); ++i) {
    Edge x = sketch.graph.edges()[i];
    if (x.id == e) continue;
    if (x.u == v) x.u = u;
    if (x.v == v) x.v = u;
    es.push_back(x);
    keep.push_back(i);
  }
  ParitySketch out{Multigraph(std::move(vs), std::move(es)), std::move(rotation),
                   sketch.parity.restricted(keep)};
  return {std::move(out), std::move(rec)};
}

ParitySketch split_sketch(const ParitySketch& sketch, const SplitRecord& r) {
  const auto& rot = sketch.rotation_at(r.merged);
  if (!cyclic_concat(rot, r.u_block, r.v_block)) {
    throw Error(ErrorKind::InconsistentSplit, "blocks are not contiguous at the merged vertex");
  }
  std::vector<VertexId> vs(sketch.graph.vertices().begin(), sketch.graph.vertices().end());
  vs.push_back(r.v);
  std::vector<Edge> es;
  for (Edge x : sketch.graph.edges()) {
    for (const Ending& f : r.v_block) {
      if (f.edge == x.id) (f.end == 0 ? x.u : x.v) = r.v;
    }
    es.push_back(x);
  }
  es.push_back(r.contracted);
  Multigraph g(std::move(vs), std::move(es));
  const std::uint8_t u_end = r.contracted.u == r.u ? 0 : 1;
  std::vector<std::vector<Ending>> rotation;
  for (VertexId x : g.vertices()) {
    if (x == r.u) {
      std::vector<Ending> a{{r.contracted.id, u_end}};
      a.insert(a.end(), r.u_block.begin(), r.u_block.end());
      rotation.push_back(std::move(a));
    } else if (x == r.v) {
      std::vector<Ending> b{{r.contracted.id, static_cast<std::uint8_t>(1 - u_end)}};
      b.insert(b.end(), r.v_block.begin(), r.v_block.end());
      rotation.push_back(std::move(b));
    } else {
      rotation.push_back(sketch.rotation_at(x));
    }
  }
  ParityMatrix parity(g.edge_count());
  for (std::size_t i = 0; i < sketch.graph.edge_count(); ++i) {
    for (std::size_t j = i + 1; j < sketch.graph.edge_count(); ++j) {
      if (!sketch.parity.get(i, j)) continue;
      parity.set(*g.edge_index(sketch.graph.edges()[i].id),
                 *g.edge_index(sketch.graph.edges()[j].id), true);
    }
  }
  return ParitySketch{std::move(g), std::move(rotation), std::move(parity)};
}

Drawing split_vertex(const Drawing& d, const SplitRecord& r) {
  const NodeId w = d.vertex_node(r.merged);
  if (w == kNone) throw Error(ErrorKind::UnknownVertex, "merged vertex " + std::to_string(r.merged));
  if (d.graph().has_vertex(r.v) && r.v != r.merged) {
    throw Error(ErrorKind::InvalidArgument, "split target vertex already present");
  }
  if (d.graph().has_edge(r.contracted.id)) {
    throw Error(ErrorKind::InvalidArgument, "contracted edge already present");
  }
  const std::vector<Ending> endings = d.endings_at(r.merged);
  if (!cyclic_concat(endings, r.u_block, r.v_block)) {
    throw Error(ErrorKind::InconsistentSplit, "blocks are not contiguous at the merged vertex");
  }
  const auto& rot = d.node(w).rotation;
  // Dart of each recorded ending at w.
  auto dart_for = [&](const Ending& x) {
    for (std::size_t i = 0; i < rot.size(); ++i) {
      if (endings[i] == x) return rot[i];
    }
    throw Error(ErrorKind::InconsistentSplit, "ending not found");
  };

  detail::MapEditor ed(d);
  const NodeId vn = ed.add_node(NodeKind::Vertex, r.v);
  ed.vertices.push_back(r.v);
  const DartId du = ed.add_dart(w, r.contracted.id);
  const DartId dv = ed.add_dart(vn, r.contracted.id);
  ed.link(du, dv);

  std::vector<DartId> u_rot{du};
  for (const Ending& x : r.u_block) u_rot.push_back(dart_for(x));
  std::vector<DartId> v_rot{dv};
  for (const Ending& x : r.v_block) {
    const DartId dd = dart_for(x);
    v_rot.push_back(dd);
    ed.darts[dd].node = vn;
  }
  ed.nodes[w].rotation = std::move(u_rot);
  ed.nodes[vn].rotation = std::move(v_rot);

  for (Edge& x : ed.edges) {
    for (const Ending& f : r.v_block) {
      if (f.edge == x.id) (f.end == 0 ? x.u : x.v) = r.v;
    }
  }
  ed.add_edge_record(r.contracted, r.contracted.u == r.u ? du : dv);
  return ed.finish();
}

}  // namespace oddplanar
