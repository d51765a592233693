#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace clocklattice {

enum class ErrorKind {
  MalformedToken,
  LabelArity,
  Disconnected,
  NonSpherical,
  SchemaViolation,
  NugatoryPresent,
  NotPrimeLike,
  StarsNotAdjacent,
  PeripheryViolation,
  NotBipartiteDual,
  InvalidGraph,
  CapExceeded,
  ClockTheoremViolation,
  TooLarge,
  NotExtremal,
  OddComponentAssertFailed,
  EvenDimension,
  UnknownFixture,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the ErrorKind tags so
/// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Raised by check_periphery; remembers which black vertex broke the rule.
class PeripheryViolation : public Error {
 public:
  PeripheryViolation(int vertex, const std::string& what)
      : Error(ErrorKind::PeripheryViolation, what), vertex_(vertex) {}

  int vertex() const noexcept { return vertex_; }

 private:
  int vertex_;
};

}  // namespace clocklattice
