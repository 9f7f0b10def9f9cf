#include "cyclolab/error.hpp"

namespace cyclolab {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NotDivisible: return "NotDivisible";
    case ErrorKind::ModulusMismatch: return "ModulusMismatch";
    case ErrorKind::NotCoprime: return "NotCoprime";
    case ErrorKind::FactorizationLimit: return "FactorizationLimit";
    case ErrorKind::LimitExceeded: return "LimitExceeded";
    case ErrorKind::RamifiedPrime: return "RamifiedPrime";
    case ErrorKind::PrimalityError: return "PrimalityError";
    case ErrorKind::BoundExhausted: return "BoundExhausted";
    case ErrorKind::SamePrime: return "SamePrime";
    case ErrorKind::VerificationFailed: return "VerificationFailed";
  }
  return "Unknown";
}

}  // namespace cyclolab
