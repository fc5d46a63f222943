#pragma once

// JSON forms of the library's value types. Rationals are "p/q" strings and
// big integers are decimal strings.

#include <string_view>

#include "json.hpp"
#include "nikulin/chow.hpp"
#include "nikulin/lattice.hpp"
#include "nikulin/positivity.hpp"

namespace nikulin::serialize {

using json = nlohmann::json;

json to_json(const lattice::DivisorClass& d);
json to_json(const lattice::GramMatrix& gram);
json to_json(const positivity::PositivityVerdict& verdict);
json to_json(const chow::BaseClass& x);
json to_json(const chow::GammaCoefficients& c);
json to_json(const chow::DivisorClassResult& r);

/// {"a": int, "t": [int × 8]}; Error(invalid_argument) on a malformed object,
/// Error(invalid_class) on a parity violation.
lattice::DivisorClass divisor_from_json(const json& j);

/// Accepts a JSON object or one of the names L, e, R1..R8, L_<m>, 0.
lattice::DivisorClass parse_divisor(std::string_view text);

chow::BaseClass base_class_from_json(const json& j);

}  // namespace nikulin::serialize
