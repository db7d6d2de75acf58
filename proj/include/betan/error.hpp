#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace betan {

/// Domain failures raised by the library. The CLI maps every `Error` to exit
/// code 2, except `Syntax`, which is a usage error.
enum class ErrorKind {
  InvalidArgument,
  NoRotation,
  InsufficientDepth,
  NotADivisor,
  IncompatibleLift,
  DepthMismatch,
  InconsistentDiff,
  PreconditionViolated,
  OutOfRange,
  FixedPointPresent,
  SizeMismatch,
  TooManyCoefficients,
  BudgetExceeded,
  TooLarge,
  NotFound,
  Syntax,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Parse failure with the byte offset into the input where it was detected.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t offset, const std::string& what)
      : Error(ErrorKind::Syntax,
              what + " at offset " + std::to_string(offset)),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace betan
