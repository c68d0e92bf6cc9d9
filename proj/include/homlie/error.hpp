#pragma once

#include <stdexcept>
#include <string>

namespace homlie {

enum class ErrorCode {
  singular_matrix,
  mode_error,
  dimension_mismatch,
  not_regular,
  not_multiplicative,
  not_automorphism,
  not_derivation,
  bad_parameter,
  not_a_group,
  complex_not_closed,
  parse_error,
};

const char* to_string(ErrorCode code) noexcept;

/// Exception type thrown by every module. The C API maps `code()` onto its
/// status enum.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace homlie
