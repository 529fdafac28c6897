#include "dedekind/error.hpp"

namespace dedekind {

std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidRing: return "InvalidRing";
    case ErrorKind::ContextMismatch: return "ContextMismatch";
    case ErrorKind::UnsupportedRing: return "UnsupportedRing";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::NotDivisible: return "NotDivisible";
    case ErrorKind::ZeroIdeal: return "ZeroIdeal";
    case ErrorKind::NotOrderTwo: return "NotOrderTwo";
    case ErrorKind::SearchExhausted: return "SearchExhausted";
    case ErrorKind::PreconditionViolation: return "PreconditionViolation";
    case ErrorKind::IntegralityViolation: return "IntegralityViolation";
    case ErrorKind::DegenerateTrace: return "DegenerateTrace";
    case ErrorKind::NotAnIsomorphism: return "NotAnIsomorphism";
    case ErrorKind::InconsistentRoutes: return "InconsistentRoutes";
    case ErrorKind::NotAUnit: return "NotAUnit";
    case ErrorKind::NonIntegralComultiplication: return "NonIntegralComultiplication";
    case ErrorKind::TorsionInTensor: return "TorsionInTensor";
    case ErrorKind::DirectSumFailure: return "DirectSumFailure";
    case ErrorKind::DifferentialSquareNonzero: return "DifferentialSquareNonzero";
    case ErrorKind::InvariantBreach: return "InvariantBreach";
    case ErrorKind::MalformedPD: return "MalformedPD";
    case ErrorKind::MalformedInput: return "MalformedInput";
  }
  return "Unknown";
}

}  // namespace dedekind
