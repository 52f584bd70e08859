#pragma once

#include <stdexcept>
#include <string>

namespace qdecomp {

enum class ErrorCode {
  UsageError,          // malformed input or argument outside an operation's domain
  NotFound,            // randomized search gave up within its budget
  HypothesisViolated,  // input outside the regime an algorithm requires
  IterationOverflow,
  RetryExhausted,
  Infeasible,
  InsufficientAnchors,
  InsertionFailed,
  MatchingDeficient,
  RegularityMismatch,
  OddOrder,
  ParseError,
};

inline const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::UsageError: return "UsageError";
    case ErrorCode::NotFound: return "NotFound";
    case ErrorCode::HypothesisViolated: return "HypothesisViolated";
    case ErrorCode::IterationOverflow: return "IterationOverflow";
    case ErrorCode::RetryExhausted: return "RetryExhausted";
    case ErrorCode::Infeasible: return "Infeasible";
    case ErrorCode::InsufficientAnchors: return "InsufficientAnchors";
    case ErrorCode::InsertionFailed: return "InsertionFailed";
    case ErrorCode::MatchingDeficient: return "MatchingDeficient";
    case ErrorCode::RegularityMismatch: return "RegularityMismatch";
    case ErrorCode::OddOrder: return "OddOrder";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

inline void require(bool cond, const std::string& what) {
  if (!cond) fail(ErrorCode::UsageError, what);
}

}  // namespace qdecomp
