#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace llab {

enum class ErrorCode {
  ZeroPolynomial,
  RingMismatch,
  RankMismatch,
  OverflowError,
  StepBudgetExceeded,
  EmptyInput,
  NegativeExponent,
  ZeroDivisorDenominator,
  EliminateAll,
  UnitIdeal,
  NotArtinian,
  NotComputable,
  NotProper,
  UndeclaredCM,
  NotInPrime,
  PositiveCharUnsupported,
  NotContaining,
  NotFiniteLength,
  NotContained,
  NotArtinianIdeal,
  NonMinimalGenerators,
  WrongLength,
  NotRegularSequence,
  GradeDeficient,
  SizeMismatch,
  WrongJSize,
  PreconditionViolated,
  NotHomogeneous,
  SyntaxError,
  UndeclaredName,
  DuplicateName,
  IOError,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code);

// All library failures are reported through this type; `code()` is the
// machine-readable kind and `what()` reads "Kind: detail".
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);

  ErrorCode code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace llab
