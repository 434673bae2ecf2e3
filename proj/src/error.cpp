#include "effnum/error.hpp"

namespace effnum {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::invalid_probability: return "InvalidProbability";
    case ErrorCode::invalid_counting: return "InvalidCountingVector";
    case ErrorCode::length_mismatch: return "LengthMismatch";
    case ErrorCode::transfer_violation: return "TransferViolation";
    case ErrorCode::degenerate_input: return "DegenerateInput";
    case ErrorCode::bad_order: return "BadOrder";
    case ErrorCode::dimension_mismatch: return "DimensionMismatch";
    case ErrorCode::non_orthonormal_basis: return "NonOrthonormalBasis";
    case ErrorCode::not_hermitian: return "NotHermitian";
    case ErrorCode::empty_record: return "EmptyRecord";
    case ErrorCode::not_normalized: return "NotNormalized";
    case ErrorCode::invalid_argument: return "InvalidArgument";
    case ErrorCode::unknown_quantifier: return "UnknownQuantifier";
    case ErrorCode::numeric_failure: return "NumericFailure";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace effnum
