#include <affpow/errors.hpp>

namespace affpow {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::DuplicateAbscissa: return "DuplicateAbscissa";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::IrrationalNodeDetected: return "IrrationalNodeDetected";
    case ErrorKind::ReconstructionFailed: return "ReconstructionFailed";
    case ErrorKind::DeltaExhausted: return "DeltaExhausted";
    case ErrorKind::UnsatisfiableSpec: return "UnsatisfiableSpec";
  }
  return "Unknown";
}

}  // namespace affpow
