#include "foliate/error.hpp"

namespace foliate {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnknownVariable: return "UnknownVariable";
    case ErrorKind::VariableMismatch: return "VariableMismatch";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotDivisible: return "NotDivisible";
    case ErrorKind::ZeroInput: return "ZeroInput";
    case ErrorKind::ZeroForm: return "ZeroForm";
    case ErrorKind::ConstantInput: return "ConstantInput";
    case ErrorKind::UnreducedGenerator: return "UnreducedGenerator";
    case ErrorKind::InvariantComponent: return "InvariantComponent";
    case ErrorKind::UnknownChart: return "UnknownChart";
    case ErrorKind::NormalCrossingsViolation: return "NormalCrossingsViolation";
    case ErrorKind::NonAdmissibleCenter: return "NonAdmissibleCenter";
    case ErrorKind::DivisorNotPreserved: return "DivisorNotPreserved";
    case ErrorKind::CurveNotInvariant: return "CurveNotInvariant";
    case ErrorKind::UndefinedIndex: return "UndefinedIndex";
    case ErrorKind::IrrationalResidue: return "IrrationalResidue";
    case ErrorKind::NilpotentOrDegenerate: return "NilpotentOrDegenerate";
    case ErrorKind::RegularOrigin: return "RegularOrigin";
    case ErrorKind::NotHomogeneous: return "NotHomogeneous";
    case ErrorKind::NotBiHomogeneous: return "NotBiHomogeneous";
    case ErrorKind::EulerViolation: return "EulerViolation";
    case ErrorKind::CommonFactor: return "CommonFactor";
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Yes: return "yes";
    case Verdict::No: return "no";
    case Verdict::Inconclusive: return "INCONCLUSIVE";
  }
  return "INCONCLUSIVE";
}

}  // namespace foliate
