#pragma once

#include <stdexcept>
#include <string>

namespace schurlat {

/// Failure categories. The numeric values of the first three double as CLI
/// exit codes.
enum class ErrorCode {
  kInvalidInput = 2,
  kCapExceeded = 3,
  kInvariantViolation = 4,
  kNegativeValuation = 10,
  kSingular = 11,
  kShapeMismatch = 12,
  kNotFullRank = 13,
  kNonIntegralInput = 14,
  kNegativeCycle = 15,
};

const char* error_code_name(ErrorCode code);

/// Exit code a command-line front end should use for this error.
int exit_code_for(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace schurlat
