#pragma once

#include <stdexcept>
#include <string>

namespace grouplab {

// Stable machine-readable error codes. These are mirrored verbatim in the
// CLI's JSON error output, so renaming one is a breaking change.
enum class ErrorCode {
  NotAssociative,
  NoIdentityAtZero,
  MissingInverse,
  NotLatinSquare,
  IndexOutOfRange,
  NotASubgroup,
  NotNormal,
  LatticeTooLarge,
  AutGroupTooLarge,
  NotAnAutomorphism,
  InvalidSpec,
  OrderCapExceeded,
  SyntaxError,
  OrderMismatch,
  ValidationError,
  RhoOutOfRange,
  HypothesisViolated,
  InvalidParameters,
  IoError,
  Internal,
};

inline const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::NotAssociative: return "NotAssociative";
    case ErrorCode::NoIdentityAtZero: return "NoIdentityAtZero";
    case ErrorCode::MissingInverse: return "MissingInverse";
    case ErrorCode::NotLatinSquare: return "NotLatinSquare";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::NotASubgroup: return "NotASubgroup";
    case ErrorCode::NotNormal: return "NotNormal";
    case ErrorCode::LatticeTooLarge: return "LatticeTooLarge";
    case ErrorCode::AutGroupTooLarge: return "AutGroupTooLarge";
    case ErrorCode::NotAnAutomorphism: return "NotAnAutomorphism";
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::OrderCapExceeded: return "OrderCapExceeded";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::OrderMismatch: return "OrderMismatch";
    case ErrorCode::ValidationError: return "ValidationError";
    case ErrorCode::RhoOutOfRange: return "RhoOutOfRange";
    case ErrorCode::HypothesisViolated: return "HypothesisViolated";
    case ErrorCode::InvalidParameters: return "InvalidParameters";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

class GroupError : public std::runtime_error {
 public:
  GroupError(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }
  const char* code_name() const { return error_code_name(code_); }

 private:
  ErrorCode code_;
};

// A failed mathematical verdict. Either a published statement is false or
// the artifact has a bug; both must abort loudly. The CLI reserves exit
// code 2 for this so CI can tell it apart from operational failures.
class CounterexampleFound : public std::runtime_error {
 public:
  explicit CounterexampleFound(const std::string& witness)
      : std::runtime_error("CounterexampleFound: " + witness) {}

  static const char* code_name() { return "CounterexampleFound"; }
};

}  // namespace grouplab
