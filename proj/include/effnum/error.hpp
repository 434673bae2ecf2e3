#pragma once

#include <stdexcept>
#include <string>

namespace effnum {

enum class ErrorCode {
  invalid_probability = 1,
  invalid_counting,
  length_mismatch,
  transfer_violation,
  degenerate_input,
  bad_order,
  dimension_mismatch,
  non_orthonormal_basis,
  not_hermitian,
  empty_record,
  not_normalized,
  invalid_argument,
  unknown_quantifier,
  numeric_failure,
};

const char* to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above; the C
/// API maps them one-to-one onto effnum_status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace effnum
