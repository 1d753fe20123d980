#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lensurf {

enum class ErrorKind {
  NonCoprime,
  OutOfRange,
  UnknownEdge,
  DimensionMismatch,
  NonIntegralWeight,
  NotNormal,
  NotConnected,
  HypothesisViolated,
  Inadmissible,
  InvalidFraction,
  OddP,
  NegativeCoordinate,
  IndexOutOfRange,
  Consistency,
  Parse,
};

std::string_view to_string(ErrorKind kind);

/// Base exception for every failure raised by the library. The kind is
/// stable and machine-checkable; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Raised when a quad vector has no triangle completion. Carries the first
/// face corner whose matching equation could not be satisfied.
class InadmissibleError : public Error {
 public:
  InadmissibleError(const std::string& message, int tet, int face_opposite,
                    int corner);

  int tet() const noexcept { return tet_; }
  int face_opposite() const noexcept { return face_opposite_; }
  int corner() const noexcept { return corner_; }

 private:
  int tet_;
  int face_opposite_;
  int corner_;
};

}  // namespace lensurf
