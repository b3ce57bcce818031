#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sqfpow {

enum class ErrorCode {
  AmbientMismatch,
  UnitIdeal,
  NotSquarefree,
  ZeroIdeal,
  OutOfRange,
  BadSpec,
  Parse,
  FaceBudgetExceeded,
  BudgetExceeded,
  Timeout,
  PreconditionViolated,
  NoDominatingClique,
  MixedDegrees,
  PropertyNotVerified,
  InvalidCertificate,
  SingleGenerator,
  CheckFailed,
};

std::string_view error_name(ErrorCode code);

/// Every failure in the library is reported by throwing one of these.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::AmbientMismatch: return "AmbientMismatch";
    case ErrorCode::UnitIdeal: return "UnitIdeal";
    case ErrorCode::NotSquarefree: return "NotSquarefree";
    case ErrorCode::ZeroIdeal: return "ZeroIdeal";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::BadSpec: return "BadSpec";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::FaceBudgetExceeded: return "FaceBudgetExceeded";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::Timeout: return "Timeout";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::NoDominatingClique: return "NoDominatingClique";
    case ErrorCode::MixedDegrees: return "MixedDegrees";
    case ErrorCode::PropertyNotVerified: return "PropertyNotVerified";
    case ErrorCode::InvalidCertificate: return "InvalidCertificate";
    case ErrorCode::SingleGenerator: return "SingleGenerator";
    case ErrorCode::CheckFailed: return "CheckFailed";
  }
  return "Unknown";
}

}  // namespace sqfpow
