#pragma once

#include <stdexcept>
#include <string>

namespace icost {

enum class errc {
  file_not_found,
  malformed_csv,
  too_many_missing,
  single_class,
  ambiguous_positive,
  class_too_small,
  empty_row_set,
  too_few_instances,
  not_binary,
  degenerate_input,
  length_mismatch,
  bad_arity,
  non_positive_cost,
  order_violation,
  profile_mismatch,
  non_finite,
  degenerate_labels,
  dimension_mismatch,
  too_few_classes,
  empty_fold,
  bad_params,
};

const char* errc_name(errc code);

/// All library failures are thrown as Error. Validation errors are caused by
/// bad user input and map to CLI exit code 2; runtime failures (numerical
/// breakdown) map to exit code 1.
class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

  errc code() const noexcept { return code_; }

  bool is_validation() const noexcept { return code_ != errc::non_finite; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace icost
