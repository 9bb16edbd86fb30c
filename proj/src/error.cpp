#include "z4seq/error.hpp"

namespace z4seq {

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::EqualPrimes: return "EqualPrimes";
    case ErrorCode::GcdNotFour: return "GcdNotFour";
    case ErrorCode::NoCommonRoot: return "NoCommonRoot";
    case ErrorCode::DegreeTooLarge: return "DegreeTooLarge";
    case ErrorCode::RingMismatch: return "RingMismatch";
    case ErrorCode::NotDivisor: return "NotDivisor";
    case ErrorCode::NotInSubring: return "NotInSubring";
    case ErrorCode::PeriodNotDividing: return "PeriodNotDividing";
    case ErrorCode::PeriodMismatch: return "PeriodMismatch";
    case ErrorCode::PeriodNotCongruent1Mod4: return "PeriodNotCongruent1Mod4";
    case ErrorCode::InternalCaseError: return "InternalCaseError";
    case ErrorCode::OracleTooLarge: return "OracleTooLarge";
    case ErrorCode::TraceFormulaPreconditionFailed:
      return "TraceFormulaPreconditionFailed";
    case ErrorCode::NonConstantResult: return "NonConstantResult";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InternalError: return "InternalError";
  }
  return "Unknown";
}

}  // namespace z4seq
