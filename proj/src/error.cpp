#include "su2cyc/error.hpp"

namespace su2cyc {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ZeroSlopePair: return "ZeroSlopePair";
    case ErrorCode::EqualSlopes: return "EqualSlopes";
    case ErrorCode::InvalidSlope: return "InvalidSlope";
    case ErrorCode::GuardViolated: return "GuardViolated";
    case ErrorCode::NotOnComponent: return "NotOnComponent";
    case ErrorCode::GapSumNotLessThan2Pi: return "GapSumNotLessThan2Pi";
    case ErrorCode::WalkDidNotTerminate: return "WalkDidNotTerminate";
    case ErrorCode::TouchesBoundaryOffAxis: return "TouchesBoundaryOffAxis";
    case ErrorCode::EpsilonTooLarge: return "EpsilonTooLarge";
    case ErrorCode::R0OutOfRange: return "R0OutOfRange";
    case ErrorCode::PathExceedsEpsilonBand: return "PathExceedsEpsilonBand";
    case ErrorCode::NotForward: return "NotForward";
    case ErrorCode::TubeTooTight: return "TubeTooTight";
    case ErrorCode::SeparationFailed: return "SeparationFailed";
    case ErrorCode::NotBoundaryCase: return "NotBoundaryCase";
    case ErrorCode::ParityMismatch: return "ParityMismatch";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::NonCommutingPeripheral: return "NonCommutingPeripheral";
    case ErrorCode::NoSolutions: return "NoSolutions";
    case ErrorCode::NotAKnotPolynomial: return "NotAKnotPolynomial";
    case ErrorCode::SchemaError: return "SchemaError";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace su2cyc
