#pragma once

#include <stdexcept>
#include <string>

namespace pogroup {

enum class ErrorCode {
  GroupMismatch,
  Unsupported,
  UnsupportedDecision,
  NotNormal,
  TorsionQuotient,
  NotInducible,
  NotExact,
  NotInjective,
  NotAntichain,
  InvalidHom,
  ResourceLimit,
  Overflow,
  ParseError,
  UnresolvedRef,
  Validation,
};

inline const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::GroupMismatch: return "GroupMismatch";
    case ErrorCode::Unsupported: return "Unsupported";
    case ErrorCode::UnsupportedDecision: return "UnsupportedDecision";
    case ErrorCode::NotNormal: return "NotNormal";
    case ErrorCode::TorsionQuotient: return "TorsionQuotient";
    case ErrorCode::NotInducible: return "NotInducible";
    case ErrorCode::NotExact: return "NotExact";
    case ErrorCode::NotInjective: return "NotInjective";
    case ErrorCode::NotAntichain: return "NotAntichain";
    case ErrorCode::InvalidHom: return "InvalidHom";
    case ErrorCode::ResourceLimit: return "ResourceLimit";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnresolvedRef: return "UnresolvedRef";
    case ErrorCode::Validation: return "Validation";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& msg)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + msg), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& msg) { throw Error(code, msg); }

}  // namespace pogroup
