#include "oddplanar/multigraph.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace oddplanar {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::UnknownEdge: return "UnknownEdge";
    case ErrorKind::UnknownVertex: return "UnknownVertex";
    case ErrorKind::InvalidDrawing: return "InvalidDrawing";
    case ErrorKind::MalformedSketch: return "MalformedSketch";
    case ErrorKind::ContractOddEdge: return "ContractOddEdge";
    case ErrorKind::ContractLoop: return "ContractLoop";
    case ErrorKind::InconsistentSplit: return "InconsistentSplit";
    case ErrorKind::NotKOddPlane: return "NotKOddPlane";
    case ErrorKind::OddPairPresent: return "OddPairPresent";
    case ErrorKind::InvalidProbability: return "InvalidProbability";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ValidationError: return "ValidationError";
    case ErrorKind::DegenerateGeometry: return "DegenerateGeometry";
    case ErrorKind::DegenerateLayout: return "DegenerateLayout";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Multigraph::Multigraph(std::vector<VertexId> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  std::sort(vertices_.begin(), vertices_.end());
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end()) {
    throw Error(ErrorKind::InvalidArgument, "duplicate vertex id");
  }
  std::sort(edges_.begin(), edges_.end(),
            [](const Edge& a, const Edge& b) { return a.id < b.id; });
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (i > 0 && edges_[i].id == edges_[i - 1].id) {
      throw Error(ErrorKind::InvalidArgument, "duplicate edge id " + std::to_string(edges_[i].id));
    }
    if (!has_vertex(edges_[i].u) || !has_vertex(edges_[i].v)) {
      throw Error(ErrorKind::InvalidArgument,
                  "edge " + std::to_string(edges_[i].id) + " has an unknown endpoint");
    }
  }
}

Multigraph Multigraph::complete(int n) {
  std::vector<VertexId> vs(static_cast<std::size_t>(n));
  std::iota(vs.begin(), vs.end(), 0);
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      es.push_back({static_cast<EdgeId>(es.size()), i, j});
    }
  }
  return Multigraph(std::move(vs), std::move(es));
}

Multigraph Multigraph::complete_bipartite(int a, int b) {
  std::vector<VertexId> vs(static_cast<std::size_t>(a + b));
  std::iota(vs.begin(), vs.end(), 0);
  std::vector<Edge> es;
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < b; ++j) {
      es.push_back({static_cast<EdgeId>(es.size()), i, a + j});
    }
  }
  return Multigraph(std::move(vs), std::move(es));
}

bool Multigraph::has_vertex(VertexId v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool Multigraph::has_edge(EdgeId e) const { return edge_index(e).has_value(); }

std::optional<std::size_t> Multigraph::vertex_index(VertexId v) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v) return std::nullopt;
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::optional<std::size_t> Multigraph::edge_index(EdgeId e) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e,
                             [](const Edge& a, EdgeId id) { return a.id < id; });
  if (it == edges_.end() || it->id != e) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

const Edge& Multigraph::edge(EdgeId e) const {
  auto i = edge_index(e);
  if (!i) throw Error(ErrorKind::UnknownEdge, "edge " + std::to_string(e));
  return edges_[*i];
}

bool Multigraph::is_simple() const {
  std::set<std::pair<VertexId, VertexId>> seen;
  for (const Edge& e : edges_) {
    if (e.is_loop()) return false;
    if (!seen.insert(std::minmax(e.u, e.v)).second) return false;
  }
  return true;
}

bool Multigraph::adjacent_at(std::size_t i, std::size_t j) const {
  if (i == j) return false;
  const Edge& a = edges_[i];
  const Edge& b = edges_[j];
  return a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v;
}

bool Multigraph::adjacent(EdgeId e, EdgeId f) const {
  auto i = edge_index(e);
  auto j = edge_index(f);
  if (!i || !j) throw Error(ErrorKind::UnknownEdge, "adjacency query");
  return adjacent_at(*i, *j);
}

std::vector<std::vector<VertexId>> Multigraph::components() const {
  std::vector<std::size_t> parent(vertices_.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Edge& e : edges_) {
    std::size_t a = find(*vertex_index(e.u));
    std::size_t b = find(*vertex_index(e.v));
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::vector<VertexId>> out;
  std::vector<int> slot(vertices_.size(), -1);
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    std::size_t r = find(i);
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[static_cast<std::size_t>(slot[r])].push_back(vertices_[i]);
  }
  return out;
}

}  // namespace oddplanar
