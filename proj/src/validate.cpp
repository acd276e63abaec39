#include "oddplanar/validate.hpp"

#include <string>

namespace oddplanar {

const char* to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::NonQuadCrossing: return "NonQuadCrossing";
    case ViolationKind::NonAlternating: return "NonAlternating";
    case ViolationKind::EulerFailure: return "EulerFailure";
    case ViolationKind::DanglingDart: return "DanglingDart";
    case ViolationKind::BadEdgePath: return "BadEdgePath";
    case ViolationKind::BadVertexNode: return "BadVertexNode";
  }
  return "Unknown";
}

namespace {

std::string node_locus(NodeId n) { return "node " + std::to_string(n); }
std::string dart_locus(DartId d) { return "dart " + std::to_string(d); }
std::string edge_locus(EdgeId e) { return "edge " + std::to_string(e); }

}  // namespace

std::vector<Violation> validate_drawing(const Drawing& d) {
  std::vector<Violation> out;
  const Multigraph& g = d.graph();
  const auto nodes = d.nodes();
  const auto darts = d.darts();
  const auto nd = static_cast<DartId>(darts.size());
  const auto nn = static_cast<NodeId>(nodes.size());

  // Vertex nodes: exactly one per graph vertex.
  std::vector<int> vertex_hits(g.vertex_count(), 0);
  for (NodeId n = 0; n < nn; ++n) {
    if (nodes[n].kind != NodeKind::Vertex) continue;
    auto i = g.vertex_index(nodes[n].vertex);
    if (!i) {
      out.push_back({ViolationKind::BadVertexNode, node_locus(n) + " names an unknown vertex"});
    } else if (++vertex_hits[*i] > 1) {
      out.push_back({ViolationKind::BadVertexNode, node_locus(n) + " duplicates a vertex"});
    }
  }
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    if (vertex_hits[i] == 0) {
      out.push_back({ViolationKind::BadVertexNode,
                     "vertex " + std::to_string(g.vertices()[i]) + " has no node"});
    }
  }

  // Darts: involution and rotation membership.
  std::vector<int> rotation_hits(darts.size(), 0);
  for (NodeId n = 0; n < nn; ++n) {
    for (DartId x : nodes[n].rotation) {
      if (x < 0 || x >= nd) {
        out.push_back({ViolationKind::DanglingDart, node_locus(n) + " lists a missing dart"});
        continue;
      }
      ++rotation_hits[x];
      if (darts[x].node != n) {
        out.push_back({ViolationKind::DanglingDart, dart_locus(x) + " owner mismatch"});
      }
    }
  }
  bool structural = true;
  for (DartId x = 0; x < nd; ++x) {
    const MapDart& md = darts[x];
    if (rotation_hits[x] != 1) {
      out.push_back({ViolationKind::DanglingDart,
                     dart_locus(x) + " appears " + std::to_string(rotation_hits[x]) +
                         " times in rotations"});
      structural = false;
    }
    if (md.twin < 0 || md.twin >= nd || md.twin == x || darts[md.twin].twin != x) {
      out.push_back({ViolationKind::DanglingDart, dart_locus(x) + " has a broken involution"});
      structural = false;
    } else if (darts[md.twin].edge != md.edge) {
      out.push_back({ViolationKind::BadEdgePath, dart_locus(x) + " segment mixes two edges"});
    }
    if (!g.has_edge(md.edge)) {
      out.push_back({ViolationKind::BadEdgePath, dart_locus(x) + " names an unknown edge"});
    }
  }
  for (NodeId n = 0; n < nn; ++n) {
    if (nodes[n].kind == NodeKind::Crossing && nodes[n].rotation.size() != 4) {
      out.push_back({ViolationKind::NonQuadCrossing,
                     node_locus(n) + " has degree " + std::to_string(nodes[n].rotation.size())});
      structural = false;
    }
  }
  if (!structural) return out;

  // Edge paths.
  std::vector<int> path_hits(darts.size(), 0);
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edges()[i];
    const auto path = d.paths()[i];
    if (path.empty()) {
      out.push_back({ViolationKind::BadEdgePath, edge_locus(e.id) + " has no path"});
      continue;
    }
    bool ok = true;
    for (std::size_t s = 0; s < path.size() && ok; ++s) {
      DartId x = path[s];
      if (x < 0 || x >= nd) {
        out.push_back({ViolationKind::BadEdgePath, edge_locus(e.id) + " lists a missing dart"});
        ok = false;
        break;
      }
      ++path_hits[x];
      ++path_hits[darts[x].twin];
      if (darts[x].edge != e.id) {
        out.push_back({ViolationKind::BadEdgePath, edge_locus(e.id) + " uses a foreign segment"});
        ok = false;
      }
      NodeId from = darts[x].node;
      if (s == 0) {
        if (from != d.vertex_node(e.u)) {
          out.push_back({ViolationKind::BadEdgePath, edge_locus(e.id) + " does not start at end 0"});
          ok = false;
        }
      } else {
        DartId prev_in = darts[path[s - 1]].twin;
        if (darts[prev_in].node != from) {
          out.push_back({ViolationKind::BadEdgePath, edge_locus(e.id) + " is not contiguous"});
          ok = false;
        } else if (nodes[from].kind == NodeKind::Vertex) {
          out.push_back({ViolationKind::BadEdgePath,
                         edge_locus(e.id) + " passes through vertex " +
                             std::to_string(nodes[from].vertex)});
          ok = false;
        } else if (d.opposite(prev_in) != x) {
          out.push_back({ViolationKind::NonAlternating,
                         edge_locus(e.id) + " turns at " + node_locus(from)});
          ok = false;
        }
      }
    }
    if (!ok) continue;
    NodeId last = darts[darts[path.back()].twin].node;
    if (last != d.vertex_node(e.v)) {
      out.push_back({ViolationKind::BadEdgePath, edge_locus(e.id) + " does not end at end 1"});
    }
  }
  for (DartId x = 0; x < nd; ++x) {
    if (path_hits[x] == 0) {
      out.push_back({ViolationKind::DanglingDart, dart_locus(x) + " lies on no edge path"});
    } else if (path_hits[x] > 1) {
      out.push_back({ViolationKind::BadEdgePath, dart_locus(x) + " lies on two passes"});
    }
  }
  if (!out.empty()) return out;

  // Genus 0: V - E + F = 2 on every component that has segments.
  std::vector<int> comp_of(nodes.size(), -1);
  const auto comps = d.map_components();
  for (std::size_t c = 0; c < comps.size(); ++c) {
    for (NodeId n : comps[c]) comp_of[n] = static_cast<int>(c);
  }
  std::vector<long> chi(comps.size(), 0);
  for (std::size_t c = 0; c < comps.size(); ++c) chi[c] = static_cast<long>(comps[c].size());
  for (DartId x = 0; x < nd; x += 1) {
    if (x < darts[x].twin) chi[comp_of[darts[x].node]] -= 1;
  }
  for (const auto& face : d.faces()) chi[comp_of[darts[face.front()].node]] += 1;
  for (std::size_t c = 0; c < comps.size(); ++c) {
    bool has_segments = false;
    for (NodeId n : comps[c]) has_segments |= !nodes[n].rotation.empty();
    long expected = has_segments ? 2 : 1;
    if (chi[c] != expected) {
      out.push_back({ViolationKind::EulerFailure,
                     "component of " + node_locus(comps[c].front()) + " has V-E+F=" +
                         std::to_string(chi[c])});
    }
  }
  return out;
}

void require_valid(const Drawing& d) {
  auto v = validate_drawing(d);
  if (!v.empty()) {
    throw Error(ErrorKind::InvalidDrawing, std::string(to_string(v.front().kind)) + " at " +
                                               v.front().locus);
  }
}

}  // namespace oddplanar
