#pragma once

#include <stdexcept>
#include <string>

namespace su2cyc {

enum class ErrorCode {
  InvalidArgument,
  ZeroSlopePair,
  EqualSlopes,
  InvalidSlope,
  GuardViolated,
  NotOnComponent,
  GapSumNotLessThan2Pi,
  WalkDidNotTerminate,
  TouchesBoundaryOffAxis,
  EpsilonTooLarge,
  R0OutOfRange,
  PathExceedsEpsilonBand,
  NotForward,
  TubeTooTight,
  SeparationFailed,
  NotBoundaryCase,
  ParityMismatch,
  NotCoprime,
  NonCommutingPeripheral,
  NoSolutions,
  NotAKnotPolynomial,
  SchemaError,
  InvariantViolation,
  ParseError,
  IoError,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace su2cyc
