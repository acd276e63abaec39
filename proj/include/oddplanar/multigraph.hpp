#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "oddplanar/ids.hpp"

namespace oddplanar {

struct Edge {
  EdgeId id = kNone;
  VertexId u = kNone;  // end 0
  VertexId v = kNone;  // end 1

  bool is_loop() const { return u == v; }
  VertexId endpoint(int end) const { return end == 0 ? u : v; }
  bool operator==(const Edge&) const = default;
};

/// Abstract multigraph. Vertices and edges are kept sorted by id, and every
/// iteration happens in that order.
class Multigraph {
 public:
  Multigraph() = default;
  /// Throws Error(InvalidArgument) on duplicate ids or dangling endpoints.
  Multigraph(std::vector<VertexId> vertices, std::vector<Edge> edges);

  static Multigraph complete(int n);
  static Multigraph complete_bipartite(int a, int b);

  std::span<const VertexId> vertices() const { return vertices_; }
  std::span<const Edge> edges() const { return edges_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  bool has_vertex(VertexId v) const;
  bool has_edge(EdgeId e) const;
  std::optional<std::size_t> vertex_index(VertexId v) const;
  std::optional<std::size_t> edge_index(EdgeId e) const;
  /// Throws Error(UnknownEdge).
  const Edge& edge(EdgeId e) const;

  /// No loops and no parallel edges.
  bool is_simple() const;
  /// Two distinct edges sharing at least one endpoint.
  bool adjacent(EdgeId e, EdgeId f) const;
  bool adjacent_at(std::size_t i, std::size_t j) const;

  VertexId max_vertex_id() const { return vertices_.empty() ? kNone : vertices_.back(); }
  EdgeId max_edge_id() const { return edges_.empty() ? kNone : edges_.back().id; }
  EdgeId next_edge_id() const { return edges_.empty() ? 0 : edges_.back().id + 1; }

  /// Connected components as sorted vertex lists, ordered by smallest vertex.
  std::vector<std::vector<VertexId>> components() const;

  bool operator==(const Multigraph&) const = default;

 private:
  std::vector<VertexId> vertices_;
  std::vector<Edge> edges_;
};

}  // namespace oddplanar
