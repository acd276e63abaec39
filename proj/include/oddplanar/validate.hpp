#pragma once

#include <string>
#include <vector>

#include "oddplanar/drawing.hpp"

namespace oddplanar {

enum class ViolationKind {
  NonQuadCrossing,
  NonAlternating,
  EulerFailure,
  DanglingDart,
  BadEdgePath,
  BadVertexNode,
};

const char* to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::string locus;
};

/// Empty iff the drawing is a genus-0 planarization whose paths are
/// consistent with its rotations.
std::vector<Violation> validate_drawing(const Drawing& d);

/// Throws Error(InvalidDrawing) naming the first violation.
void require_valid(const Drawing& d);

}  // namespace oddplanar
