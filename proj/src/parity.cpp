#include "oddplanar/parity.hpp"

#include <algorithm>
#include <bit>

#include "oddplanar/crossing_stats.hpp"

namespace oddplanar {

ParityMatrix::ParityMatrix(std::size_t n)
    : n_(n), rows_(n, std::vector<std::uint64_t>((n + 63) / 64, 0)) {}

void ParityMatrix::set(std::size_t i, std::size_t j, bool value) {
  if (i == j) return;
  const std::uint64_t bj = std::uint64_t{1} << (j & 63);
  const std::uint64_t bi = std::uint64_t{1} << (i & 63);
  if (value) {
    rows_[i][j >> 6] |= bj;
    rows_[j][i >> 6] |= bi;
  } else {
    rows_[i][j >> 6] &= ~bj;
    rows_[j][i >> 6] &= ~bi;
  }
}

bool ParityMatrix::row_is_zero(std::size_t i) const {
  return std::all_of(rows_[i].begin(), rows_[i].end(), [](std::uint64_t w) { return w == 0; });
}

std::size_t ParityMatrix::row_weight(std::size_t i) const {
  std::size_t w = 0;
  for (std::uint64_t word : rows_[i]) w += static_cast<std::size_t>(std::popcount(word));
  return w;
}

std::size_t ParityMatrix::odd_pairs() const {
  std::size_t total = 0;
  for (std::size_t i = 0; i < n_; ++i) total += row_weight(i);
  return total / 2;
}

bool ParityMatrix::is_zero() const {
  for (std::size_t i = 0; i < n_; ++i) {
    if (!row_is_zero(i)) return false;
  }
  return true;
}

ParityMatrix ParityMatrix::restricted(std::span<const std::size_t> keep) const {
  ParityMatrix out(keep.size());
  for (std::size_t a = 0; a < keep.size(); ++a) {
    for (std::size_t b = a + 1; b < keep.size(); ++b) {
      if (get(keep[a], keep[b])) out.set(a, b, true);
    }
  }
  return out;
}

bool ParitySketch::odd(EdgeId e, EdgeId f) const {
  auto i = graph.edge_index(e);
  auto j = graph.edge_index(f);
  if (!i || !j) throw Error(ErrorKind::UnknownEdge, "parity query");
  return parity.get(*i, *j);
}

bool ParitySketch::is_even_edge(EdgeId e) const {
  auto i = graph.edge_index(e);
  if (!i) throw Error(ErrorKind::UnknownEdge, "edge " + std::to_string(e));
  return parity.row_is_zero(*i);
}

const std::vector<Ending>& ParitySketch::rotation_at(VertexId v) const {
  auto i = graph.vertex_index(v);
  if (!i) throw Error(ErrorKind::UnknownVertex, "vertex " + std::to_string(v));
  return rotation[*i];
}

void ParitySketch::check() const {
  if (rotation.size() != graph.vertex_count() || parity.size() != graph.edge_count()) {
    throw Error(ErrorKind::MalformedSketch, "size mismatch");
  }
  std::vector<int> seen(graph.edge_count() * 2, 0);
  for (std::size_t vi = 0; vi < rotation.size(); ++vi) {
    VertexId v = graph.vertices()[vi];
    for (const Ending& x : rotation[vi]) {
      auto i = graph.edge_index(x.edge);
      if (!i || x.end > 1) throw Error(ErrorKind::MalformedSketch, "unknown ending");
      if (graph.edges()[*i].endpoint(x.end) != v) {
        throw Error(ErrorKind::MalformedSketch,
                    "ending of edge " + std::to_string(x.edge) + " at the wrong vertex");
      }
      if (++seen[*i * 2 + x.end] > 1) {
        throw Error(ErrorKind::MalformedSketch, "ending listed twice");
      }
    }
  }
  if (std::find(seen.begin(), seen.end(), 0) != seen.end()) {
    throw Error(ErrorKind::MalformedSketch, "ending missing from rotation");
  }
}

ParitySketch parity_sketch(const Drawing& d) {
  ParitySketch sk;
  sk.graph = d.graph();
  for (VertexId v : sk.graph.vertices()) sk.rotation.push_back(d.endings_at(v));
  const PairCounts counts = pair_crossing_counts(d);
  const std::size_t m = sk.graph.edge_count();
  sk.parity = ParityMatrix(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (counts.pair(i, j) % 2 == 1) sk.parity.set(i, j, true);
    }
  }
  return sk;
}

bool endings_interleave(std::span<const Ending> rotation, EdgeId e, EdgeId f) {
  // Walk the cycle once; count f-endings seen strictly between e's endings.
  int e_seen = 0;
  int f_inside = 0;
  for (const Ending& x : rotation) {
    if (x.edge == e) {
      ++e_seen;
    } else if (x.edge == f && e_seen == 1) {
      ++f_inside;
    }
  }
  if (e_seen != 2) throw Error(ErrorKind::MalformedSketch, "edge is not a loop here");
  return f_inside == 1;
}

}  // namespace oddplanar
