#pragma once

#include <stdexcept>
#include <string>

namespace threeweight {

// Failure classes surfaced by the workbench. OracleMismatch,
// InternalInconsistency, NonIntegerSum and WitnessNotFound signal
// implementation bugs, not bad input; they map to the "theory mismatch"
// exit path so they can never be silently swallowed.
enum class Errc {
  InvalidParams,
  UnsupportedRegime,
  DomainError,
  RegimeError,
  NonIntegerSum,
  OracleMismatch,
  InternalInconsistency,
  BudgetExceeded,
  WitnessNotFound,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::InvalidParams: return "InvalidParams";
    case Errc::UnsupportedRegime: return "UnsupportedRegime";
    case Errc::DomainError: return "DomainError";
    case Errc::RegimeError: return "RegimeError";
    case Errc::NonIntegerSum: return "NonIntegerSum";
    case Errc::OracleMismatch: return "OracleMismatch";
    case Errc::InternalInconsistency: return "InternalInconsistency";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::WitnessNotFound: return "WitnessNotFound";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code),
        message_(message) {}

  Errc code() const { return code_; }
  const std::string& message() const { return message_; }
  const char* code_name() const { return errc_name(code_); }

 private:
  Errc code_;
  std::string message_;
};

}  // namespace threeweight
