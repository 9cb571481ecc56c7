#include "llab/error.hpp"

namespace llab {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::RingMismatch: return "RingMismatch";
    case ErrorCode::RankMismatch: return "RankMismatch";
    case ErrorCode::OverflowError: return "OverflowError";
    case ErrorCode::StepBudgetExceeded: return "StepBudgetExceeded";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::NegativeExponent: return "NegativeExponent";
    case ErrorCode::ZeroDivisorDenominator: return "ZeroDivisorDenominator";
    case ErrorCode::EliminateAll: return "EliminateAll";
    case ErrorCode::UnitIdeal: return "UnitIdeal";
    case ErrorCode::NotArtinian: return "NotArtinian";
    case ErrorCode::NotComputable: return "NotComputable";
    case ErrorCode::NotProper: return "NotProper";
    case ErrorCode::UndeclaredCM: return "UndeclaredCM";
    case ErrorCode::NotInPrime: return "NotInPrime";
    case ErrorCode::PositiveCharUnsupported: return "PositiveCharUnsupported";
    case ErrorCode::NotContaining: return "NotContaining";
    case ErrorCode::NotFiniteLength: return "NotFiniteLength";
    case ErrorCode::NotContained: return "NotContained";
    case ErrorCode::NotArtinianIdeal: return "NotArtinianIdeal";
    case ErrorCode::NonMinimalGenerators: return "NonMinimalGenerators";
    case ErrorCode::WrongLength: return "WrongLength";
    case ErrorCode::NotRegularSequence: return "NotRegularSequence";
    case ErrorCode::GradeDeficient: return "GradeDeficient";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::WrongJSize: return "WrongJSize";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::NotHomogeneous: return "NotHomogeneous";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UndeclaredName: return "UndeclaredName";
    case ErrorCode::DuplicateName: return "DuplicateName";
    case ErrorCode::IOError: return "IOError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail),
      code_(code),
      detail_(detail) {}

}  // namespace llab
