#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace oddplanar {

using VertexId = std::int32_t;
using EdgeId = std::int32_t;
using NodeId = std::int32_t;
using DartId = std::int32_t;

inline constexpr std::int32_t kNone = -1;

/// One end of an edge. `end` is 0 for the edge's first endpoint and 1 for the
/// second; for a loop the two ends are told apart only by this label.
struct Ending {
  EdgeId edge = kNone;
  std::uint8_t end = 0;

  friend auto operator<=>(const Ending&, const Ending&) = default;
};

enum class ErrorKind {
  UnknownEdge,
  UnknownVertex,
  InvalidDrawing,
  MalformedSketch,
  ContractOddEdge,
  ContractLoop,
  InconsistentSplit,
  NotKOddPlane,
  OddPairPresent,
  InvalidProbability,
  BudgetExceeded,
  ParseError,
  ValidationError,
  DegenerateGeometry,
  DegenerateLayout,
  InvalidArgument,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace oddplanar
