#include "betan/error.hpp"

namespace betan {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NoRotation: return "NoRotation";
    case ErrorKind::InsufficientDepth: return "InsufficientDepth";
    case ErrorKind::NotADivisor: return "NotADivisor";
    case ErrorKind::IncompatibleLift: return "IncompatibleLift";
    case ErrorKind::DepthMismatch: return "DepthMismatch";
    case ErrorKind::InconsistentDiff: return "InconsistentDiff";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::FixedPointPresent: return "FixedPointPresent";
    case ErrorKind::SizeMismatch: return "SizeMismatch";
    case ErrorKind::TooManyCoefficients: return "TooManyCoefficients";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::NotFound: return "NotFound";
    case ErrorKind::Syntax: return "SyntaxError";
  }
  return "Error";
}

}  // namespace betan
