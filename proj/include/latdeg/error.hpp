#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace latdeg {

enum class ErrorCode {
  LengthMismatch,
  ZeroVector,
  NegativeExponent,
  Overflow,
  RankDeficient,
  NoPositiveGrading,
  UnboundedFiber,
  SplitFailure,
  CommonFactor,
  HomogeneityViolation,
  EmptyDecomposition,
  NotCodimTwo,
  NotStabilized,
  CaseMismatch,
  InvalidProfile,
  ResourceLimit,
  StandardGradingRequired,
  InvalidArgument,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::NegativeExponent: return "NegativeExponent";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::RankDeficient: return "RankDeficient";
    case ErrorCode::NoPositiveGrading: return "NoPositiveGrading";
    case ErrorCode::UnboundedFiber: return "UnboundedFiber";
    case ErrorCode::SplitFailure: return "SplitFailure";
    case ErrorCode::CommonFactor: return "CommonFactor";
    case ErrorCode::HomogeneityViolation: return "HomogeneityViolation";
    case ErrorCode::EmptyDecomposition: return "EmptyDecomposition";
    case ErrorCode::NotCodimTwo: return "NotCodimTwo";
    case ErrorCode::NotStabilized: return "NotStabilized";
    case ErrorCode::CaseMismatch: return "CaseMismatch";
    case ErrorCode::InvalidProfile: return "InvalidProfile";
    case ErrorCode::ResourceLimit: return "ResourceLimit";
    case ErrorCode::StandardGradingRequired: return "StandardGradingRequired";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

/// Every failure in the library surfaces as this exception; `code()` is what
/// callers (and the CLI exit-code mapping) dispatch on.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace latdeg
