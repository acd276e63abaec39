#include "oddplanar/svg.hpp"

#include <Eigen/SparseCore>
#include <Eigen/SparseLU>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <numbers>
#include <optional>

namespace oddplanar {

namespace {

constexpr double kTau = 2 * std::numbers::pi;

struct Graph2 {
  int count = 0;
  std::vector<std::pair<int, int>> links;
  std::map<int, Point2> pinned;

  int add() { return count++; }
};

std::optional<std::vector<Point2>> barycentric(const Graph2& g) {
  std::vector<int> slot(static_cast<std::size_t>(g.count), -1);
  int free = 0;
  for (int v = 0; v < g.count; ++v) {
    if (!g.pinned.count(v)) slot[v] = free++;
  }
  std::vector<Point2> pos(static_cast<std::size_t>(g.count));
  for (const auto& [v, p] : g.pinned) pos[v] = p;
  if (free == 0) return pos;

  std::vector<Eigen::Triplet<double>> trip;
  Eigen::VectorXd bx = Eigen::VectorXd::Zero(free), by = Eigen::VectorXd::Zero(free);
  auto half = [&](int a, int b) {
    if (slot[a] < 0) return;
    trip.emplace_back(slot[a], slot[a], 1.0);
    if (slot[b] >= 0) {
      trip.emplace_back(slot[a], slot[b], -1.0);
    } else {
      bx[slot[a]] += pos[b].x;
      by[slot[a]] += pos[b].y;
    }
  };
  for (auto [a, b] : g.links) {
    half(a, b);
    half(b, a);
  }
  Eigen::SparseMatrix<double> A(free, free);
  A.setFromTriplets(trip.begin(), trip.end());
  Eigen::SparseLU<Eigen::SparseMatrix<double>> lu;
  lu.compute(A);
  if (lu.info() != Eigen::Success) return std::nullopt;
  const Eigen::VectorXd x = lu.solve(bx), y = lu.solve(by);
  if (lu.info() != Eigen::Success) return std::nullopt;
  for (int v = 0; v < g.count; ++v) {
    if (slot[v] >= 0) pos[v] = {x[slot[v]], y[slot[v]]};
  }
  return pos;
}

double cross(Point2 o, Point2 a, Point2 b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

bool on_segment(Point2 p, Point2 a, Point2 b, double eps) {
  return std::min(a.x, b.x) - eps <= p.x && p.x <= std::max(a.x, b.x) + eps &&
         std::min(a.y, b.y) - eps <= p.y && p.y <= std::max(a.y, b.y) + eps;
}

// Closed segments ab and cd meet (touching counts).
bool segments_meet(Point2 a, Point2 b, Point2 c, Point2 d, double eps) {
  const double d1 = cross(c, d, a), d2 = cross(c, d, b), d3 = cross(a, b, c), d4 = cross(a, b, d);
  const double s = eps * eps;
  if (((d1 > s && d2 < -s) || (d1 < -s && d2 > s)) && ((d3 > s && d4 < -s) || (d3 < -s && d4 > s))) {
    return true;
  }
  return (std::abs(d1) <= s && on_segment(a, c, d, eps)) || (std::abs(d2) <= s && on_segment(b, c, d, eps)) ||
         (std::abs(d3) <= s && on_segment(c, a, b, eps)) || (std::abs(d4) <= s && on_segment(d, a, b, eps));
}

// A drawn straight piece between two layout points.
struct Piece {
  int a, b;
};

// Checks that the layout is a plane straight-line drawing of the pieces and
// that the directions `first[d]` leaving every node reproduce its rotation.
bool plane_and_rotations(const Drawing& d, const std::vector<NodeId>& comp, const std::vector<int>& local,
                         const std::vector<Point2>& pos, const std::vector<int>& first,
                         const std::vector<Piece>& pieces, double eps) {
  std::vector<Point2> sorted = pos;
  std::sort(sorted.begin(), sorted.end(), [](Point2 p, Point2 q) { return p.x < q.x || (p.x == q.x && p.y < q.y); });
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    for (std::size_t j = i; j > 0 && sorted[i].x - sorted[j - 1].x <= eps; --j) {
      if (std::abs(sorted[i].y - sorted[j - 1].y) <= eps) return false;
    }
  }
  for (NodeId n : comp) {
    const auto& rot = d.node(n).rotation;
    if (rot.size() < 2) continue;
    const Point2 o = pos[local[n]];
    double turn = 0;
    for (std::size_t i = 0; i < rot.size(); ++i) {
      const Point2 p = pos[first[rot[i]]], q = pos[first[rot[(i + 1) % rot.size()]]];
      double delta = std::atan2(p.y - o.y, p.x - o.x) - std::atan2(q.y - o.y, q.x - o.x);
      delta = std::fmod(delta + 2 * kTau, kTau);
      if (delta < 1e-9 || delta > kTau - 1e-9) return false;
      turn += delta;
    }
    if (std::abs(turn - kTau) > 1e-6) return false;
  }
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    for (std::size_t j = i + 1; j < pieces.size(); ++j) {
      const Piece p = pieces[i], q = pieces[j];
      const bool shared = p.a == q.a || p.a == q.b || p.b == q.a || p.b == q.b;
      if (!shared) {
        if (segments_meet(pos[p.a], pos[p.b], pos[q.a], pos[q.b], eps)) return false;
        continue;
      }
      if ((p.a == q.a || p.a == q.b) && (p.b == q.a || p.b == q.b)) return false;
      // Pieces meeting at a point must leave it in different directions.
      const int o = (p.a == q.a || p.a == q.b) ? p.a : p.b;
      const int u = p.a == o ? p.b : p.a, v = q.a == o ? q.b : q.a;
      const double cr = cross(pos[o], pos[u], pos[v]);
      const double dot = (pos[u].x - pos[o].x) * (pos[v].x - pos[o].x) + (pos[u].y - pos[o].y) * (pos[v].y - pos[o].y);
      if (std::abs(cr) <= eps * eps && dot > 0) return false;
    }
  }
  return true;
}

struct ComponentLayout {
  std::vector<Point2> pos;   // local node ids first, then helper points
  std::vector<int> first;    // per dart: layout point right after its node
  std::vector<int> second;   // per dart: next point, or -1 for straight segments
};

std::vector<Point2> polygon(std::size_t count, double radius) {
  std::vector<Point2> out;
  for (std::size_t j = 0; j < count; ++j) {
    const double a = kTau / 4 - kTau * static_cast<double>(j) / static_cast<double>(count);  // clockwise
    out.push_back({radius * std::cos(a), radius * std::sin(a)});
  }
  return out;
}

std::optional<ComponentLayout> straight(const Drawing& d, const std::vector<NodeId>& comp,
                                        const std::vector<int>& local, const std::vector<DartId>& outer,
                                        double radius) {
  std::vector<NodeId> boundary;
  for (DartId x : outer) boundary.push_back(d.dart(x).node);
  auto sorted = boundary;
  std::sort(sorted.begin(), sorted.end());
  if (boundary.size() < 2 || std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return std::nullopt;

  Graph2 g;
  g.count = static_cast<int>(comp.size());
  const auto corners = polygon(boundary.size(), radius);
  for (std::size_t j = 0; j < boundary.size(); ++j) g.pinned[local[boundary[j]]] = corners[j];
  ComponentLayout out;
  out.first.assign(d.darts().size(), -1);
  out.second.assign(d.darts().size(), -1);
  std::vector<Piece> pieces;
  for (NodeId n : comp) {
    for (DartId x : d.node(n).rotation) {
      const DartId t = d.dart(x).twin;
      const int a = local[n], b = local[d.dart(t).node];
      if (a == b) return std::nullopt;
      out.first[x] = b;
      if (x < t) {
        g.links.push_back({a, b});
        pieces.push_back({a, b});
      }
    }
  }
  auto pos = barycentric(g);
  if (!pos) return std::nullopt;
  out.pos = *std::move(pos);
  if (!plane_and_rotations(d, comp, local, out.pos, out.first, pieces, radius * 1e-9)) return std::nullopt;
  return out;
}

ComponentLayout routed(const Drawing& d, const std::vector<NodeId>& comp, const std::vector<int>& local,
                       const std::vector<std::vector<DartId>>& faces, std::size_t outer, double radius) {
  Graph2 g;
  g.count = static_cast<int>(comp.size());
  ComponentLayout out;
  out.first.assign(d.darts().size(), -1);
  out.second.assign(d.darts().size(), -1);
  std::vector<Piece> pieces;
  for (NodeId n : comp) {
    for (DartId x : d.node(n).rotation) {
      const DartId t = d.dart(x).twin;
      if (x > t) continue;
      const int a = g.add(), b = g.add();
      out.first[x] = a;
      out.second[x] = b;
      out.first[t] = b;
      out.second[t] = a;
      const int u = local[n], v = local[d.dart(t).node];
      for (Piece p : {Piece{u, a}, Piece{a, b}, Piece{b, v}}) {
        g.links.push_back({p.a, p.b});
        pieces.push_back(p);
      }
    }
  }
  for (std::size_t f = 0; f < faces.size(); ++f) {
    std::vector<int> walk;
    for (DartId x : faces[f]) {
      walk.push_back(local[d.dart(x).node]);
      walk.push_back(out.first[x]);
      walk.push_back(out.second[x]);
    }
    const std::size_t len = walk.size();
    std::vector<int> ring;
    for (std::size_t j = 0; j < len; ++j) ring.push_back(g.add());
    for (std::size_t j = 0; j < len; ++j) {
      g.links.push_back({ring[j], walk[j]});
      g.links.push_back({ring[j], walk[(j + 1) % len]});
      g.links.push_back({ring[j], ring[(j + 1) % len]});
    }
    if (f == outer) {
      const auto corners = polygon(len, radius);
      for (std::size_t j = 0; j < len; ++j) g.pinned[ring[j]] = corners[j];
    } else {
      const int c = g.add();
      for (int r : ring) g.links.push_back({c, r});
    }
  }
  auto pos = barycentric(g);
  if (!pos) throw Error(ErrorKind::DegenerateLayout, "barycentric system is singular");
  out.pos = *std::move(pos);
  if (!plane_and_rotations(d, comp, local, out.pos, out.first, pieces, radius * 1e-12)) {
    throw Error(ErrorKind::DegenerateLayout, "routed layout failed its checks");
  }
  return out;
}

std::string fixed(double v) {
  if (std::abs(v) < 5e-7) v = 0;  // no "-0.000000"
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

}  // namespace

Layout layout_drawing(const Drawing& d) {
  constexpr double kRadius = 1.0;
  Layout res;
  res.nodes.resize(d.nodes().size());
  const auto all_faces = d.faces();
  const auto comps = d.map_components();
  std::vector<int> comp_of(d.nodes().size(), -1), local(d.nodes().size(), -1);
  for (std::size_t c = 0; c < comps.size(); ++c) {
    for (std::size_t i = 0; i < comps[c].size(); ++i) {
      comp_of[comps[c][i]] = static_cast<int>(c);
      local[comps[c][i]] = static_cast<int>(i);
    }
  }
  // Per dart: the interior points it passes before reaching its twin's node.
  std::vector<std::vector<Point2>> via(d.darts().size());
  for (std::size_t c = 0; c < comps.size(); ++c) {
    const Point2 shift{static_cast<double>(c) * 2.5 * kRadius, 0};
    const auto& comp = comps[c];
    std::vector<std::vector<DartId>> faces;
    for (const auto& f : all_faces) {
      if (comp_of[d.dart(f.front()).node] == static_cast<int>(c)) faces.push_back(f);
    }
    if (faces.empty()) {
      for (NodeId n : comp) res.nodes[n] = shift;
      continue;
    }
    std::size_t outer = 0;
    for (std::size_t f = 1; f < faces.size(); ++f) {
      if (faces[f].size() > faces[outer].size()) outer = f;
    }
    auto lay = straight(d, comp, local, faces[outer], kRadius);
    if (!lay) {
      lay = routed(d, comp, local, faces, outer, kRadius);
      res.fallback = true;
    }
    for (NodeId n : comp) res.nodes[n] = {lay->pos[local[n]].x + shift.x, lay->pos[local[n]].y};
    for (NodeId n : comp) {
      for (DartId x : d.node(n).rotation) {
        if (lay->second[x] < 0) continue;
        for (int p : {lay->first[x], lay->second[x]}) via[x].push_back({lay->pos[p].x + shift.x, lay->pos[p].y});
      }
    }
  }
  for (std::size_t i = 0; i < d.graph().edge_count(); ++i) {
    std::vector<Point2> line;
    for (DartId x : d.paths()[i]) {
      if (line.empty()) line.push_back(res.nodes[d.dart(x).node]);
      line.insert(line.end(), via[x].begin(), via[x].end());
      line.push_back(res.nodes[d.dart(d.dart(x).twin).node]);
    }
    res.edges.push_back(std::move(line));
  }
  return res;
}

std::string render_svg(const Drawing& d, const SvgOptions& options) {
  const Layout lay = layout_drawing(d);
  const double r = options.radius;
  double min_x = 0, max_x = 0, min_y = 0, max_y = 0;
  bool any = false;
  auto grow = [&](Point2 p) {
    if (!any) {
      min_x = max_x = p.x;
      min_y = max_y = p.y;
      any = true;
    }
    min_x = std::min(min_x, p.x);
    max_x = std::max(max_x, p.x);
    min_y = std::min(min_y, p.y);
    max_y = std::max(max_y, p.y);
  };
  for (const auto& p : lay.nodes) grow(p);
  for (const auto& line : lay.edges) {
    for (const auto& p : line) grow(p);
  }
  const double margin = 0.1;
  // Layout space to screen: scale by the radius and flip y.
  auto sx = [&](double x) { return fixed((x - min_x + margin) * r); };
  auto sy = [&](double y) { return fixed((max_y - y + margin) * r); };
  const double width = (max_x - min_x + 2 * margin) * r, height = (max_y - min_y + 2 * margin) * r;

  static const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                   "#ff7f0e", "#17becf", "#8c564b", "#e377c2"};
  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + fixed(width) + "\" height=\"" +
         fixed(height) + "\" viewBox=\"0 0 " + fixed(width) + " " + fixed(height) + "\">\n";
  out += "<g fill=\"none\" stroke-width=\"2\">\n";
  for (std::size_t i = 0; i < lay.edges.size(); ++i) {
    out += "<polyline class=\"edge\" data-edge=\"" + std::to_string(d.graph().edges()[i].id) + "\" stroke=\"" +
           kPalette[i % 8] + "\" points=\"";
    for (std::size_t j = 0; j < lay.edges[i].size(); ++j) {
      if (j) out += " ";
      out += sx(lay.edges[i][j].x) + "," + sy(lay.edges[i][j].y);
    }
    out += "\"/>\n";
  }
  out += "</g>\n<g font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\">\n";
  for (std::size_t n = 0; n < d.nodes().size(); ++n) {
    const MapNode& mn = d.nodes()[n];
    if (mn.kind != NodeKind::Vertex) continue;
    const std::string x = sx(lay.nodes[n].x), y = sy(lay.nodes[n].y);
    out += "<circle class=\"vertex\" data-vertex=\"" + std::to_string(mn.vertex) + "\" cx=\"" + x + "\" cy=\"" + y +
           "\" r=\"9\" fill=\"white\" stroke=\"black\"/>\n";
    if (options.labels) {
      out += "<text x=\"" + x + "\" y=\"" + y + "\" dy=\"4\">" + std::to_string(mn.vertex) + "</text>\n";
    }
  }
  out += "</g>\n</svg>\n";
  return out;
}

}  // namespace oddplanar
