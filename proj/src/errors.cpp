#include "nikulin/errors.hpp"

namespace nikulin {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::invalid_genus: return "invalid-genus";
    case ErrorKind::invalid_class: return "invalid-class";
    case ErrorKind::invalid_bounds: return "invalid-bounds";
    case ErrorKind::invalid_argument: return "invalid-argument";
    case ErrorKind::out_of_range: return "out-of-range";
    case ErrorKind::internal_inconsistency: return "internal-inconsistency";
    case ErrorKind::derivation_failure: return "derivation-failure";
    case ErrorKind::theorem_check_failure: return "theorem-check-failure";
    case ErrorKind::formula_violation: return "formula-violation";
    case ErrorKind::io_error: return "io-error";
  }
  return "unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

}  // namespace nikulin
