#include "oddplanar/construct.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "detail/map_editor.hpp"
#include "detail/slot_builder.hpp"
#include "oddplanar/rng.hpp"
#include "oddplanar/validate.hpp"

namespace oddplanar {

namespace {

using i128 = __int128;

i128 cross(Point a, Point b) { return i128(a.x) * b.y - i128(a.y) * b.x; }
i128 dot(Point a, Point b) { return i128(a.x) * b.x + i128(a.y) * b.y; }
Point sub(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
int sign(i128 v) { return (v > 0) - (v < 0); }
int orient(Point a, Point b, Point c) { return sign(cross(sub(b, a), sub(c, a))); }

[[noreturn]] void degenerate(const std::string& what) {
  throw Error(ErrorKind::DegenerateGeometry, what);
}

// Closed-segment containment of a point known to be collinear with it.
bool within(Point p, Point q, Point r) {
  return std::min(p.x, q.x) <= r.x && r.x <= std::max(p.x, q.x) && std::min(p.y, q.y) <= r.y &&
         r.y <= std::max(p.y, q.y);
}

bool on_segment(Point p, Point q, Point r) { return orient(p, q, r) == 0 && within(p, q, r); }

bool touches(Point p, Point q, Point r, Point s) {
  const int o1 = orient(p, q, r), o2 = orient(p, q, s), o3 = orient(r, s, p), o4 = orient(r, s, q);
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;
  return on_segment(p, q, r) || on_segment(p, q, s) || on_segment(r, s, p) || on_segment(r, s, q);
}

struct Segment {
  std::size_t edge;  // index into g.edges()
  std::size_t index; // position along the polyline
  Point p, q;
};

// Parameter along a segment as an exact fraction with positive denominator.
struct Param {
  i128 num, den;
  friend bool operator<(const Param& a, const Param& b) { return a.num * b.den < b.num * a.den; }
  friend bool operator==(const Param& a, const Param& b) { return a.num * b.den == b.num * a.den; }
};

struct Hit {
  std::size_t seg;
  Param t;
  NodeId node;
  int in, out;
};

// Clockwise angular order of direction vectors (y axis pointing up).
bool clockwise_before(Point a, Point b) {
  auto half = [](Point p) { return (p.y > 0 || (p.y == 0 && p.x > 0)) ? 0 : 1; };
  const int ha = half(a), hb = half(b);
  if (ha != hb) return ha > hb;
  return cross(a, b) < 0;
}

}  // namespace

Drawing drawing_from_polylines(const Multigraph& g, const std::map<VertexId, Point>& pos,
                               const std::map<EdgeId, std::vector<Point>>& bends) {
  constexpr std::int64_t kLimit = std::int64_t{1} << 30;
  auto checked = [&](Point p) {
    if (p.x <= -kLimit || p.x >= kLimit || p.y <= -kLimit || p.y >= kLimit) {
      throw Error(ErrorKind::InvalidArgument, "coordinate out of range");
    }
    return p;
  };
  std::vector<Point> vpos;
  for (VertexId v : g.vertices()) {
    auto it = pos.find(v);
    if (it == pos.end()) throw Error(ErrorKind::UnknownVertex, "no position for vertex " + std::to_string(v));
    vpos.push_back(checked(it->second));
  }
  for (std::size_t i = 0; i < vpos.size(); ++i) {
    for (std::size_t j = i + 1; j < vpos.size(); ++j) {
      if (vpos[i] == vpos[j]) degenerate("two vertices share a position");
    }
  }
  const auto edges = g.edges();
  std::vector<std::vector<Point>> poly(edges.size());
  std::vector<Segment> segs;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    poly[i].push_back(vpos[*g.vertex_index(edges[i].u)]);
    if (auto it = bends.find(edges[i].id); it != bends.end()) {
      for (Point b : it->second) poly[i].push_back(checked(b));
    }
    poly[i].push_back(vpos[*g.vertex_index(edges[i].v)]);
    if (edges[i].is_loop() && poly[i].size() < 4) degenerate("a loop needs at least two bends");
    for (std::size_t j = 0; j + 1 < poly[i].size(); ++j) {
      if (poly[i][j] == poly[i][j + 1]) degenerate("zero-length segment");
      segs.push_back({i, j, poly[i][j], poly[i][j + 1]});
    }
  }

  // Curves may meet a vertex only at their own ends.
  for (const Segment& s : segs) {
    const std::size_t last = poly[s.edge].size() - 2;
    for (std::size_t w = 0; w < vpos.size(); ++w) {
      if (!on_segment(s.p, s.q, vpos[w])) continue;
      const bool own = (s.index == 0 && vpos[w] == s.p) || (s.index == last && vpos[w] == s.q);
      if (!own) degenerate("a curve passes through a vertex");
    }
  }

  detail::SlotBuilder builder(g);
  std::vector<std::vector<Hit>> hits(edges.size());
  for (std::size_t a = 0; a < segs.size(); ++a) {
    for (std::size_t b = a + 1; b < segs.size(); ++b) {
      const Segment& s = segs[a];
      const Segment& t = segs[b];
      if (!touches(s.p, s.q, t.p, t.q)) continue;
      const Point ds = sub(s.q, s.p), dt = sub(t.q, t.p);
      const i128 den = cross(ds, dt);
      const bool proper = orient(s.p, s.q, t.p) * orient(s.p, s.q, t.q) < 0 &&
                          orient(t.p, t.q, s.p) * orient(t.p, t.q, s.q) < 0;
      if (!proper) {
        // Allowed only when the two pieces share an endpoint and nothing else.
        Point shared{};
        bool has_shared = false;
        for (Point x : {s.p, s.q}) {
          if (x == t.p || x == t.q) { shared = x; has_shared = true; }
        }
        const bool consecutive = s.edge == t.edge && t.index == s.index + 1;
        const bool at_vertex =
            has_shared && std::find(vpos.begin(), vpos.end(), shared) != vpos.end();
        if (!has_shared || !(consecutive || at_vertex)) degenerate("curves touch without crossing");
        if (den == 0) {
          const Point so = s.p == shared ? s.q : s.p;
          const Point to = t.p == shared ? t.q : t.p;
          if (dot(sub(so, shared), sub(to, shared)) > 0) degenerate("overlapping curves");
        }
        continue;
      }
      Param ts{cross(sub(t.p, s.p), dt), den};
      Param tt{cross(sub(t.p, s.p), ds), den};
      if (den < 0) {
        ts = {-ts.num, -den};
        tt = {-tt.num, -den};
      }
      const NodeId c = builder.add_crossing();
      // Slots: e_out, then the other three clockwise.
      const bool t_leftward = den > 0;
      hits[s.edge].push_back({s.index, ts, c, 2, 0});
      hits[t.edge].push_back({t.index, tt, c, t_leftward ? 1 : 3, t_leftward ? 3 : 1});
    }
  }

  // Rotations at real vertices.
  std::vector<std::vector<std::pair<Point, Ending>>> at(vpos.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto& pl = poly[i];
    at[*g.vertex_index(edges[i].u)].push_back({sub(pl[1], pl[0]), {edges[i].id, 0}});
    at[*g.vertex_index(edges[i].v)].push_back(
        {sub(pl[pl.size() - 2], pl.back()), {edges[i].id, 1}});
  }
  std::map<Ending, int> slot;
  for (std::size_t w = 0; w < at.size(); ++w) {
    auto& list = at[w];
    std::sort(list.begin(), list.end(),
              [](const auto& a, const auto& b) { return clockwise_before(a.first, b.first); });
    for (std::size_t k = 0; k + 1 < list.size(); ++k) {
      if (!clockwise_before(list[k].first, list[k + 1].first)) degenerate("overlapping endings");
    }
    builder.set_slots(static_cast<NodeId>(w), static_cast<int>(list.size()));
    for (std::size_t k = 0; k < list.size(); ++k) slot[list[k].second] = static_cast<int>(k);
  }

  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto& h = hits[i];
    std::sort(h.begin(), h.end(), [](const Hit& a, const Hit& b) {
      return a.seg != b.seg ? a.seg < b.seg : a.t < b.t;
    });
    for (std::size_t k = 0; k + 1 < h.size(); ++k) {
      if (h[k].seg == h[k + 1].seg && h[k].t == h[k + 1].t) degenerate("three curves through a point");
    }
    std::vector<detail::PathStep> steps;
    steps.push_back({builder.vertex_node(edges[i].u), -1, slot.at({edges[i].id, 0})});
    for (const Hit& x : h) steps.push_back({x.node, x.in, x.out});
    steps.push_back({builder.vertex_node(edges[i].v), slot.at({edges[i].id, 1}), -1});
    builder.set_path(edges[i].id, std::move(steps));
  }
  return builder.build();
}

Drawing drawing_from_rotation_system(const Multigraph& g,
                                     const std::vector<std::vector<EdgeId>>& rotation) {
  if (rotation.size() != g.vertex_count()) {
    throw Error(ErrorKind::InvalidArgument, "rotation system size mismatch");
  }
  detail::SlotBuilder builder(g);
  auto slot_of = [&](VertexId v, EdgeId e) {
    const auto& rot = rotation[*g.vertex_index(v)];
    auto it = std::find(rot.begin(), rot.end(), e);
    if (it == rot.end()) throw Error(ErrorKind::InvalidArgument, "edge missing from rotation");
    return static_cast<int>(it - rot.begin());
  };
  for (std::size_t w = 0; w < rotation.size(); ++w) {
    builder.set_slots(static_cast<NodeId>(w), static_cast<int>(rotation[w].size()));
  }
  for (const Edge& e : g.edges()) {
    if (e.is_loop()) throw Error(ErrorKind::InvalidArgument, "loops are not supported");
    builder.set_path(e.id, {{builder.vertex_node(e.u), -1, slot_of(e.u, e.id)},
                            {builder.vertex_node(e.v), slot_of(e.v, e.id), -1}});
  }
  return builder.build();
}

std::optional<Drawing> try_embed_planar(const Multigraph& g) {
  if (!g.is_simple()) throw Error(ErrorKind::InvalidArgument, "planar embedding needs a simple graph");
  using Graph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                      boost::property<boost::vertex_index_t, int>,
                                      boost::property<boost::edge_index_t, int>>;
  using EdgeDesc = boost::graph_traits<Graph>::edge_descriptor;
  const auto edges = g.edges();
  Graph bg(g.vertex_count());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto [ed, ok] = boost::add_edge(*g.vertex_index(edges[i].u), *g.vertex_index(edges[i].v), bg);
    boost::put(boost::edge_index, bg, ed, static_cast<int>(i));
  }
  std::vector<std::vector<EdgeDesc>> embedding(g.vertex_count());
  const bool planar = boost::boyer_myrvold_planarity_test(
      boost::boyer_myrvold_params::graph = bg,
      boost::boyer_myrvold_params::embedding =
          boost::make_iterator_property_map(embedding.begin(), boost::get(boost::vertex_index, bg)));
  if (!planar) return std::nullopt;
  std::vector<std::vector<EdgeId>> rotation(g.vertex_count());
  for (std::size_t w = 0; w < embedding.size(); ++w) {
    for (const EdgeDesc& ed : embedding[w]) {
      rotation[w].push_back(edges[boost::get(boost::edge_index, bg, ed)].id);
    }
  }
  Drawing d = drawing_from_rotation_system(g, rotation);
  if (!validate_drawing(d).empty()) {
    // Boyer-Myrvold reports counterclockwise order on some builds; the
    // mirror image is then the valid one.
    for (auto& r : rotation) std::reverse(r.begin(), r.end());
    d = drawing_from_rotation_system(g, rotation);
    require_valid(d);
  }
  return d;
}

Drawing embed_planar(const Multigraph& g) {
  auto d = try_embed_planar(g);
  if (!d) throw Error(ErrorKind::InvalidArgument, "graph is not planar");
  return *std::move(d);
}

std::optional<InsertionRoute> find_route(const Drawing& d, VertexId u, VertexId v,
                                         const std::function<bool(EdgeId)>& may_cross,
                                         std::uint64_t order) {
  if (u == v) throw Error(ErrorKind::InvalidArgument, "route endpoints coincide");
  const NodeId nu = d.vertex_node(u), nv = d.vertex_node(v);
  if (nu == kNone) throw Error(ErrorKind::UnknownVertex, std::to_string(u));
  if (nv == kNone) throw Error(ErrorKind::UnknownVertex, std::to_string(v));
  Rng rng(order);
  auto shuffled = [&](std::vector<DartId> v) {
    if (order != 0) rng.shuffle(v);
    return v;
  };
  const auto ru = shuffled(d.node(nu).rotation);
  const auto rv = shuffled(d.node(nv).rotation);
  if (ru.empty() || rv.empty()) {
    return InsertionRoute{ru.empty() ? kNone : ru[0], {}, rv.empty() ? kNone : rv[0]};
  }
  const auto faces = d.faces();
  std::vector<int> face_of(d.darts().size(), -1);
  for (std::size_t f = 0; f < faces.size(); ++f) {
    for (DartId x : faces[f]) face_of[x] = static_cast<int>(f);
  }
  std::vector<DartId> target(faces.size(), kNone);
  for (DartId t : rv) {
    if (target[face_of[t]] == kNone) target[face_of[t]] = t;
  }
  // Different map components: any corners will do.
  {
    const auto comps = d.map_components();
    for (const auto& c : comps) {
      const bool hu = std::binary_search(c.begin(), c.end(), nu);
      const bool hv = std::binary_search(c.begin(), c.end(), nv);
      if (hu != hv) return InsertionRoute{ru[0], {}, rv[0]};
    }
  }
  std::vector<DartId> via(faces.size(), kNone);   // dart crossed to enter the face
  std::vector<DartId> root(faces.size(), kNone);  // start dart when the face is a source
  std::vector<char> seen(faces.size(), 0);
  std::deque<int> queue;
  for (DartId s : ru) {
    const int f = face_of[s];
    if (seen[f]) continue;
    seen[f] = 1;
    root[f] = s;
    queue.push_back(f);
  }
  while (!queue.empty()) {
    const int f = queue.front();
    queue.pop_front();
    if (target[f] != kNone) {
      InsertionRoute r;
      r.end = target[f];
      int cur = f;
      while (root[cur] == kNone) {
        r.crossed.push_back(via[cur]);
        cur = face_of[via[cur]];
      }
      r.start = root[cur];
      std::reverse(r.crossed.begin(), r.crossed.end());
      return r;
    }
    for (DartId c : shuffled(faces[f])) {
      if (!may_cross(d.dart(c).edge)) continue;
      const int g2 = face_of[d.dart(c).twin];
      if (seen[g2]) continue;
      seen[g2] = 1;
      via[g2] = c;
      queue.push_back(g2);
    }
  }
  return std::nullopt;
}

namespace {

void insert_before(detail::MapEditor& ed, NodeId n, DartId anchor, DartId d) {
  auto& rot = ed.nodes[n].rotation;
  if (anchor == kNone) {
    rot.push_back(d);
  } else {
    if (ed.node_of(anchor) != n) throw Error(ErrorKind::InvalidArgument, "route corner at wrong vertex");
    rot.insert(rot.begin() + ed.pos(anchor), d);
  }
}

}  // namespace

Drawing insert_edge(const Drawing& d, const Edge& e, const InsertionRoute& route) {
  if (d.graph().edge_index(e.id)) throw Error(ErrorKind::InvalidArgument, "edge id in use");
  if (e.is_loop()) throw Error(ErrorKind::InvalidArgument, "loops are not supported");
  detail::MapEditor ed(d);
  const NodeId nu = ed.vertex_node(e.u), nv = ed.vertex_node(e.v);
  if (nu == kNone || nv == kNone) throw Error(ErrorKind::UnknownVertex, "edge endpoint");
  const DartId du = ed.add_dart(nu, e.id);
  insert_before(ed, nu, route.start, du);
  DartId prev = du;
  for (DartId c : route.crossed) {
    const DartId back = ed.twin(c);
    const EdgeId ce = ed.darts[c].edge;
    const NodeId z = ed.add_node(NodeKind::Crossing, kNone);
    const DartId zw = ed.add_dart(z, ce);
    const DartId ze = ed.add_dart(z, ce);
    const DartId in = ed.add_dart(z, e.id);
    const DartId out = ed.add_dart(z, e.id);
    ed.link(c, zw);
    ed.link(ze, back);
    ed.link(prev, in);
    ed.nodes[z].rotation = {in, ze, out, zw};
    prev = out;
  }
  const DartId dv = ed.add_dart(nv, e.id);
  insert_before(ed, nv, route.end, dv);
  ed.link(prev, dv);
  ed.add_edge_record(e, du);
  return ed.finish();
}

Drawing double_crossing(const Drawing& d, DartId a, DartId b, std::pair<NodeId, NodeId>* created) {
  const auto n = static_cast<DartId>(d.darts().size());
  if (a < 0 || b < 0 || a >= n || b >= n) throw Error(ErrorKind::InvalidArgument, "dart out of range");
  const EdgeId ea = d.dart(a).edge, eb = d.dart(b).edge;
  if (ea == eb) throw Error(ErrorKind::InvalidArgument, "double crossing needs two different edges");
  bool same_face = false;
  for (DartId x = d.face_next(a);; x = d.face_next(x)) {
    if (x == b) same_face = true;
    if (x == a || same_face) break;
  }
  if (!same_face) throw Error(ErrorKind::InvalidArgument, "darts do not share a face");
  detail::MapEditor ed(d);
  const DartId a2 = ed.twin(a), b2 = ed.twin(b);
  const NodeId p = ed.add_node(NodeKind::Crossing, kNone);
  const NodeId q = ed.add_node(NodeKind::Crossing, kNone);
  const DartId x1 = ed.add_dart(p, ea), x2 = ed.add_dart(p, ea);
  const DartId x3 = ed.add_dart(q, ea), x4 = ed.add_dart(q, ea);
  const DartId y1 = ed.add_dart(q, eb), y2 = ed.add_dart(q, eb);
  const DartId y3 = ed.add_dart(p, eb), y4 = ed.add_dart(p, eb);
  ed.link(a, x1);
  ed.link(x2, x3);
  ed.link(x4, a2);
  ed.link(b, y1);
  ed.link(y2, y3);
  ed.link(y4, b2);
  ed.nodes[p].rotation = {x2, y3, x1, y4};
  ed.nodes[q].rotation = {x3, y1, x4, y2};
  std::vector<NodeId> map;
  Drawing out = ed.finish(&map);
  if (created) *created = {map[p], map[q]};
  return out;
}

Drawing undo_double_crossing(const Drawing& d, NodeId p, NodeId q) {
  const auto nn = static_cast<NodeId>(d.nodes().size());
  if (p < 0 || q < 0 || p >= nn || q >= nn || p == q || !d.is_crossing(p) || !d.is_crossing(q)) {
    throw Error(ErrorKind::InvalidArgument, "not a pair of crossing nodes");
  }
  // p and q must bound a bigon face.
  bool bigon = false;
  for (DartId x : d.node(p).rotation) {
    const DartId y = d.face_next(x);
    if (d.dart(y).node == q && d.face_next(y) == x && d.dart(x).edge != d.dart(y).edge) bigon = true;
  }
  if (!bigon) throw Error(ErrorKind::InvalidArgument, "crossings do not bound a bigon");
  detail::MapEditor ed(d);
  for (NodeId n : {p, q}) {
    const auto rot = ed.nodes[n].rotation;
    ed.join_arms(rot[0], rot[2]);
    ed.join_arms(rot[1], rot[3]);
    ed.drop_node(n);
  }
  Drawing out = ed.finish();
  if (!validate_drawing(out).empty()) throw Error(ErrorKind::InvalidArgument, "undo breaks the map");
  return out;
}

Drawing add_curl(const Drawing& d, DartId a) {
  if (a < 0 || a >= static_cast<DartId>(d.darts().size())) {
    throw Error(ErrorKind::InvalidArgument, "dart out of range");
  }
  detail::MapEditor ed(d);
  const EdgeId e = ed.darts[a].edge;
  const DartId a2 = ed.twin(a);
  const NodeId c = ed.add_node(NodeKind::Crossing, kNone);
  const DartId west = ed.add_dart(c, e), east = ed.add_dart(c, e);
  const DartId l1 = ed.add_dart(c, e), l2 = ed.add_dart(c, e);
  ed.link(a, west);
  ed.link(east, a2);
  ed.link(l1, l2);
  ed.nodes[c].rotation = {l1, east, west, l2};
  return ed.finish();
}

PerturbResult perturb_even(const Drawing& d, int moves, std::uint64_t seed) {
  Rng rng(seed);
  PerturbResult r{d, {}};
  for (int i = 0; i < moves; ++i) {
    std::vector<std::pair<DartId, DartId>> options;
    for (const auto& f : r.drawing.faces()) {
      for (DartId a : f) {
        for (DartId b : f) {
          if (r.drawing.dart(a).edge != r.drawing.dart(b).edge) options.push_back({a, b});
        }
      }
    }
    if (options.empty()) break;
    const auto [a, b] = options[rng.below(options.size())];
    std::pair<NodeId, NodeId> made;
    r.drawing = double_crossing(r.drawing, a, b, &made);
    r.moves.push_back({a, b, made.first, made.second});
  }
  return r;
}

Drawing replay_moves(const Drawing& d, const std::vector<DoubleCrossingMove>& moves) {
  Drawing out = d;
  for (const auto& m : moves) out = double_crossing(out, m.a, m.b);
  return out;
}

Drawing invert_moves(const Drawing& d, const std::vector<DoubleCrossingMove>& moves) {
  Drawing out = d;
  for (auto it = moves.rbegin(); it != moves.rend(); ++it) out = undo_double_crossing(out, it->p, it->q);
  return out;
}

}  // namespace oddplanar
