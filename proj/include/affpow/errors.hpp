#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace affpow {

enum class ErrorKind {
  ZeroPolynomial,
  DuplicateAbscissa,
  DimensionMismatch,
  ParseError,
  InvalidArgument,
  IrrationalNodeDetected,
  ReconstructionFailed,
  DeltaExhausted,
  UnsatisfiableSpec,
};

std::string_view to_string(ErrorKind kind);

/// Typed failure raised by every operation in the library. The kind is the
/// machine-readable part; the message adds context for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace affpow
