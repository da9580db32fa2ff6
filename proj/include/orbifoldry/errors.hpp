#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace orbifoldry {

// Every failure the library reports carries one of these kinds so callers
// (the CLI, the verification suite) can map it without string matching.
enum class ErrorKind {
  ParseError,
  NotSymmetric,
  NotEven,
  NotPositiveDefinite,
  DimensionMismatch,
  SingularMatrix,
  BudgetExceeded,
  ZeroLeadingTerm,
  NonPositiveExponent,
  BeyondCutoff,
  NotGramPreserving,
  NotUnimodular,
  NonCyclotomicFactor,
  OrderDoesNotDivide,
  NotFound,
  FixedPointsPresent,
  SingularOneMinusG,
  NotPerfectSquare,
  UnsupportedFixedSublattice,
  MismatchedModulus,
  ModulusTooLarge,
  NotSeparable,
  WeightHypothesisFailed,
  UnknownHighestWeight,
  DataMissing,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace orbifoldry
