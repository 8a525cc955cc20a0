#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace contring {

// Every failure the library reports carries one of these kinds; the CLI maps
// them onto structured error objects.
enum class ErrorKind {
  DivisionByZero,
  ZeroPolynomial,
  NotInvertible,
  DimensionMismatch,
  FieldMismatch,
  PreconditionViolation,
  RankTooSmall,
  NotMonic,
  DegreeZero,
  BadRanks,
  ZeroIdempotent,
  BudgetExceeded,
  NotOrthogonal,
  UnequalRanks,
  NotPartition,
  IncompatibleShapes,
  NotTriangularizable,
  NotAlgebraicOverS,
  CenterNotRoot,
  NoTriangularizableApproximant,
  NotDivisible,
  NotInGL_RE,
  HypothesisNotMet,
  UnknownSubcommand,
  ParseError,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& message);

}  // namespace contring
