#pragma once

#include <stdexcept>
#include <string>

namespace foliate {

enum class ErrorKind {
  SyntaxError,
  UnknownVariable,
  VariableMismatch,
  DimensionMismatch,
  NotDivisible,
  ZeroInput,
  ZeroForm,
  ConstantInput,
  UnreducedGenerator,
  InvariantComponent,
  UnknownChart,
  NormalCrossingsViolation,
  NonAdmissibleCenter,
  DivisorNotPreserved,
  CurveNotInvariant,
  UndefinedIndex,
  IrrationalResidue,
  NilpotentOrDegenerate,
  RegularOrigin,
  NotHomogeneous,
  NotBiHomogeneous,
  EulerViolation,
  CommonFactor,
  InvalidInput,
  Internal,
};

const char* error_kind_name(ErrorKind kind);

/// Every recoverable failure in the library is reported through this type.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }
  const char* kind_name() const noexcept { return error_kind_name(kind_); }

 private:
  ErrorKind kind_;
};

/// Three-valued verdict used by every certifying check.
enum class Verdict { Yes, No, Inconclusive };

const char* verdict_name(Verdict v);

}  // namespace foliate
