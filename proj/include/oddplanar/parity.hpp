#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "oddplanar/drawing.hpp"
#include "oddplanar/multigraph.hpp"

namespace oddplanar {

/// Symmetric GF(2) matrix with a zero diagonal, stored as packed bit rows.
class ParityMatrix {
 public:
  ParityMatrix() = default;
  explicit ParityMatrix(std::size_t n);

  std::size_t size() const { return n_; }
  bool get(std::size_t i, std::size_t j) const {
    return (rows_[i][j >> 6] >> (j & 63)) & 1U;
  }
  /// Sets both (i, j) and (j, i). Writes to the diagonal are ignored.
  void set(std::size_t i, std::size_t j, bool value);
  bool row_is_zero(std::size_t i) const;
  std::size_t row_weight(std::size_t i) const;
  /// Number of odd unordered pairs.
  std::size_t odd_pairs() const;
  bool is_zero() const;
  /// Submatrix on the given indices, in the given order.
  ParityMatrix restricted(std::span<const std::size_t> keep) const;

  bool operator==(const ParityMatrix&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::vector<std::uint64_t>> rows_;
};

/// Rotation system plus pairwise crossing parities: what the redrawing
/// arguments actually look at. Self-crossing parity is not kept.
struct ParitySketch {
  Multigraph graph;
  /// Clockwise endings per vertex, indexed like `graph.vertices()`.
  std::vector<std::vector<Ending>> rotation;
  /// Indexed like `graph.edges()`.
  ParityMatrix parity;

  bool odd(EdgeId e, EdgeId f) const;
  bool is_even_edge(EdgeId e) const;
  const std::vector<Ending>& rotation_at(VertexId v) const;
  /// Throws Error(MalformedSketch) if a rotation does not list every ending
  /// of the graph exactly once at the right vertex, or the matrix is mis-sized.
  void check() const;

  bool operator==(const ParitySketch&) const = default;
};

/// Parities and rotations of a valid drawing.
ParitySketch parity_sketch(const Drawing& d);

/// True iff the two endings of `f` lie in different arcs cut out by the two
/// endings of `e` in the cyclic sequence. For loops at one vertex of a sphere
/// drawing this is exactly their crossing parity.
bool endings_interleave(std::span<const Ending> rotation, EdgeId e, EdgeId f);

}  // namespace oddplanar
