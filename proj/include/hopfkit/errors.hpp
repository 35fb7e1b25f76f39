#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hopfkit {

/// Machine-readable failure categories. Every exception thrown by the library
/// carries one of these so the CLI can map it to a diagnostic and exit code.
enum class ErrorCode {
  FieldMismatch,
  DivisionByZero,
  NotPrime,
  DimensionMismatch,
  NonSquare,
  Singular,
  ZeroPolynomial,
  FactorizationUnsupported,
  NonUnital,
  NotIdempotent,
  NotCommutative,
  NotSemisimple,
  NotSplit,
  NotSplitCenter,
  Undetermined,
  ZeroModule,
  AxiomViolation,
  NoInvariantFunctional,
  NonUniqueFunctional,
  NotGalois,
  CoinvariantsNotSplit,
  NoCompleteFunctional,
  NotHomogeneous,
  Disconnected,
  CannotCertifySplit,
  NotEquivariantlyAbsolutelySemisimple,
  InvalidInput,
  Cancelled,
  ParseError,
  Io,
  Internal,
};

std::string_view error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Throws Error(Internal) when a verified mathematical identity fails. These
/// guard results that theory says cannot fail on valid input.
inline void ensure(bool condition, const std::string& what) {
  if (!condition) throw Error(ErrorCode::Internal, what);
}

}  // namespace hopfkit
