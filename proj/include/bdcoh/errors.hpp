#pragma once

#include <stdexcept>
#include <string>

namespace bdcoh {

enum class ErrorKind {
  DivisionByZero,
  IncompatibleExtension,
  ZeroInput,
  NotAnExtension,
  FactorizationBound,
  RankMismatch,
  SingularMatrix,
  MalformedTriple,
  BoundExceeded,
  NoContinuousParameter,
  BadContinuousParameter,
  EmptyCohomology,
  WrongAssignmentLength,
  Unfactored,
  NotACocycleShape,
  DegeneratePivot,
  ReductionFailed,
  ParseError,
  UsageError,
};

const char* to_string(ErrorKind kind);

// Single exception type for the library; callers switch on kind().
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace bdcoh
