#include "evoaut/error.hpp"

namespace evoaut {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::ZeroArgument: return "ZeroArgument";
    case ErrorKind::NotPrimeField: return "NotPrimeField";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::ZeroVector: return "ZeroVector";
    case ErrorKind::NotANaturalBasis: return "NotANaturalBasis";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::UnknownVertex: return "UnknownVertex";
    case ErrorKind::NotAGraphAutomorphism: return "NotAGraphAutomorphism";
    case ErrorKind::AlgebraMismatch: return "AlgebraMismatch";
    case ErrorKind::DepthTooSmall: return "DepthTooSmall";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::InternalInvariant: return "InternalInvariant";
  }
  return "Unknown";
}

void invariant_failure(const std::string& what) {
  throw Error(ErrorKind::InternalInvariant, what);
}

}  // namespace evoaut
