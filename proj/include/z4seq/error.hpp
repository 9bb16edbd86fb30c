#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace z4seq {

// Stable error identifiers. The CLI prints the name, so never renumber or
// rename an existing entry.
enum class ErrorCode {
  InvalidArgument,
  NotCoprime,
  NotPrime,
  EqualPrimes,
  GcdNotFour,
  NoCommonRoot,
  DegreeTooLarge,
  RingMismatch,
  NotDivisor,
  NotInSubring,
  PeriodNotDividing,
  PeriodMismatch,
  PeriodNotCongruent1Mod4,
  InternalCaseError,
  OracleTooLarge,
  TraceFormulaPreconditionFailed,
  NonConstantResult,
  ParseError,
  InternalError,
};

std::string_view error_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace z4seq
