#pragma once

#include <stdexcept>
#include <string>

namespace qsk {

enum class ErrorCode {
  DomainViolation,
  ParameterDomain,
  DenominatorPole,
  PoleError,
  BranchDomain,
  DivisionByVanishingProduct,
  IntegerAlphaUnsupported,
  NonConvergent,
};

const char* to_string(ErrorCode code);

/// Every failure raised by the library. The CLI maps NonConvergent to exit
/// code 3 and every other code to exit code 2.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  int exit_code() const noexcept { return code_ == ErrorCode::NonConvergent ? 3 : 2; }

 private:
  ErrorCode code_;
};

inline const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DomainViolation: return "DomainViolation";
    case ErrorCode::ParameterDomain: return "ParameterDomain";
    case ErrorCode::DenominatorPole: return "DenominatorPole";
    case ErrorCode::PoleError: return "PoleError";
    case ErrorCode::BranchDomain: return "BranchDomain";
    case ErrorCode::DivisionByVanishingProduct: return "DivisionByVanishingProduct";
    case ErrorCode::IntegerAlphaUnsupported: return "IntegerAlphaUnsupported";
    case ErrorCode::NonConvergent: return "NonConvergent";
  }
  return "Unknown";
}

}  // namespace qsk
