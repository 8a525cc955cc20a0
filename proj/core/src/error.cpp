#include "contring/error.hpp"

namespace contring {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::PreconditionViolation: return "PreconditionViolation";
    case ErrorKind::RankTooSmall: return "RankTooSmall";
    case ErrorKind::NotMonic: return "NotMonic";
    case ErrorKind::DegreeZero: return "DegreeZero";
    case ErrorKind::BadRanks: return "BadRanks";
    case ErrorKind::ZeroIdempotent: return "ZeroIdempotent";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::NotOrthogonal: return "NotOrthogonal";
    case ErrorKind::UnequalRanks: return "UnequalRanks";
    case ErrorKind::NotPartition: return "NotPartition";
    case ErrorKind::IncompatibleShapes: return "IncompatibleShapes";
    case ErrorKind::NotTriangularizable: return "NotTriangularizable";
    case ErrorKind::NotAlgebraicOverS: return "NotAlgebraicOverS";
    case ErrorKind::CenterNotRoot: return "CenterNotRoot";
    case ErrorKind::NoTriangularizableApproximant: return "NoTriangularizableApproximant";
    case ErrorKind::NotDivisible: return "NotDivisible";
    case ErrorKind::NotInGL_RE: return "NotInGL_RE";
    case ErrorKind::HypothesisNotMet: return "HypothesisNotMet";
    case ErrorKind::UnknownSubcommand: return "UnknownSubcommand";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

void fail(ErrorKind kind, const std::string& message) { throw Error(kind, message); }

}  // namespace contring
