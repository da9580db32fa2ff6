#include "orbifoldry/errors.hpp"

namespace orbifoldry {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::NotEven: return "NotEven";
    case ErrorKind::NotPositiveDefinite: return "NotPositiveDefinite";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::ZeroLeadingTerm: return "ZeroLeadingTerm";
    case ErrorKind::NonPositiveExponent: return "NonPositiveExponent";
    case ErrorKind::BeyondCutoff: return "BeyondCutoff";
    case ErrorKind::NotGramPreserving: return "NotGramPreserving";
    case ErrorKind::NotUnimodular: return "NotUnimodular";
    case ErrorKind::NonCyclotomicFactor: return "NonCyclotomicFactor";
    case ErrorKind::OrderDoesNotDivide: return "OrderDoesNotDivide";
    case ErrorKind::NotFound: return "NotFound";
    case ErrorKind::FixedPointsPresent: return "FixedPointsPresent";
    case ErrorKind::SingularOneMinusG: return "SingularOneMinusG";
    case ErrorKind::NotPerfectSquare: return "NotPerfectSquare";
    case ErrorKind::UnsupportedFixedSublattice: return "UnsupportedFixedSublattice";
    case ErrorKind::MismatchedModulus: return "MismatchedModulus";
    case ErrorKind::ModulusTooLarge: return "ModulusTooLarge";
    case ErrorKind::NotSeparable: return "NotSeparable";
    case ErrorKind::WeightHypothesisFailed: return "WeightHypothesisFailed";
    case ErrorKind::UnknownHighestWeight: return "UnknownHighestWeight";
    case ErrorKind::DataMissing: return "DataMissing";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace orbifoldry
