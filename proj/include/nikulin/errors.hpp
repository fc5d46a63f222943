#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace nikulin {

enum class ErrorKind {
  invalid_genus,
  invalid_class,
  invalid_bounds,
  invalid_argument,
  out_of_range,
  internal_inconsistency,
  derivation_failure,
  theorem_check_failure,
  formula_violation,
  io_error,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries a machine-readable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace nikulin
