#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace arcsupport {

enum class ErrorKind {
  ZeroVector,
  NonFiniteCoordinate,
  TooFewVertices,
  DuplicateVertex,
  SelfIntersecting,
  ParamOutOfRange,
  StraightArc,
  MalformedFunction,
  InvalidDelta,
  NotFound,
  GenerationExhausted,
  MalformedInput,
};

/// Stable identifier for an error kind ("StraightArc", ...). Used verbatim
/// in CLI diagnostics.
std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace arcsupport
