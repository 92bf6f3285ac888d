#pragma once

#include <stdexcept>
#include <string>

namespace toricstab {

enum class ErrorKind {
  SingularMatrix,
  DegreeMismatch,
  Unbounded,
  Empty,
  NotFullDimensional,
  OriginNotInterior,
  DegenerateNormal,
  DegenerateSpan,
  NotLatticePolytope,
  NotReflexive,
  ThetaConstant,
  PreconditionFailed,
  InvalidArgument,
  Parse,
  Validation,
  Io,
};

const char* to_string(ErrorKind kind);

/// The single exception type thrown by the library; `kind()` is the machine
/// readable category, `what()` carries the human context.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace toricstab
