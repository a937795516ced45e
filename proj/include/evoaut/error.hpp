#pragma once

#include <stdexcept>
#include <string>

namespace evoaut {

enum class ErrorKind {
  DivisionByZero,
  FieldMismatch,
  ZeroArgument,
  NotPrimeField,
  DimensionMismatch,
  ZeroVector,
  NotANaturalBasis,
  TooLarge,
  UnknownVertex,
  NotAGraphAutomorphism,
  AlgebraMismatch,
  DepthTooSmall,
  InvalidArgument,
  Parse,
  InternalInvariant,
};

const char* to_string(ErrorKind kind);

/// Every failure raised by the library carries a kind so callers (the CLI in
/// particular) can map it to an exit status without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Raised for violated internal invariants (re-verification failures).
[[noreturn]] void invariant_failure(const std::string& what);

}  // namespace evoaut
