#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hiveweb {

enum class ErrorKind {
  Overflow,
  InvalidPolygonTriangulation,
  InvalidTriangulation,
  NotFlippable,
  SelfFoldedUnsupported,
  IncompleteHive,
  InvalidHive,
  SamplingFailed,
  InvalidWebCoords,
  InconsistentSide,
  GluingMismatch,
  Unreachable,
  OmegaEmpty,
  UnknownVertex,
  Malformed,
};

std::string_view to_string(ErrorKind kind);

/// Every recoverable failure in the library is reported as an Error
/// carrying a machine-readable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace hiveweb
