#include "schurlat/error.hpp"

namespace schurlat {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidInput:
      return "InvalidInput";
    case ErrorCode::kCapExceeded:
      return "CapExceeded";
    case ErrorCode::kInvariantViolation:
      return "InvariantViolation";
    case ErrorCode::kNegativeValuation:
      return "NegativeValuation";
    case ErrorCode::kSingular:
      return "Singular";
    case ErrorCode::kShapeMismatch:
      return "ShapeMismatch";
    case ErrorCode::kNotFullRank:
      return "NotFullRank";
    case ErrorCode::kNonIntegralInput:
      return "NonIntegralInput";
    case ErrorCode::kNegativeCycle:
      return "NegativeCycle";
  }
  return "Unknown";
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kCapExceeded:
      return 3;
    case ErrorCode::kInvariantViolation:
      return 4;
    default:
      return 2;
  }
}

}  // namespace schurlat
