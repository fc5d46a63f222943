#include "nikulin/serialize.hpp"

#include <charconv>
#include <string>

#include "nikulin/errors.hpp"

namespace nikulin::serialize {

using chow::Symbol;
using lattice::DivisorClass;

namespace {

long long parse_integer(std::string_view text) {
  long long value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw Error(ErrorKind::invalid_argument, "not an integer: '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

json to_json(const DivisorClass& d) {
  return json{{"a", d.a()}, {"t", d.t()}};
}

json to_json(const lattice::GramMatrix& gram) {
  json rows = json::array();
  for (const auto& row : gram.entries) rows.push_back(row);
  return rows;
}

json to_json(const positivity::PositivityVerdict& verdict) {
  return json{{"status", std::string(positivity::to_string(verdict.status))},
              {"witness", verdict.witness ? to_json(*verdict.witness) : json(nullptr)},
              {"rationale", verdict.rationale}};
}

json to_json(const chow::BaseClass& x) {
  json j;
  j["scalar"] = to_string(x.scalar_part());
  for (std::size_t i = 0; i < chow::kSymbols; ++i) {
    const auto s = static_cast<Symbol>(i);
    j[std::string(chow::to_string(s))] = to_string(x[s]);
  }
  j["truncated"] = x.truncated();
  return j;
}

json to_json(const chow::GammaCoefficients& c) {
  return json{{"gamma_0", to_string(c.gamma[0])},
              {"gamma_1", to_string(c.gamma[1])},
              {"gamma_2", to_string(c.gamma[2])},
              {"gamma_3", to_string(c.gamma[3])},
              {"lambda", to_string(c.hodge)},
              {"in_span", c.residual.is_zero()},
              {"residual", to_json(c.residual)}};
}

json to_json(const chow::DivisorClassResult& r) {
  const auto scaled = r.scaled();
  return json{{"g", r.g},
              {"m", r.m},
              {"g_m", r.twisted_genus},
              {"A", to_string(r.scale)},
              {"A_source", "A^{g_m-3}_{g_m+1}"},
              {"gamma", to_json(r.normalized)},
              {"kappa", to_json(r.kappa_form)},
              {"scaled",
               {{"gamma_0", to_string(scaled[0])},
                {"gamma_1", to_string(scaled[1])},
                {"gamma_2", to_string(scaled[2])},
                {"gamma_3", to_string(scaled[3])},
                {"lambda", to_string(scaled[4])}}}};
}

DivisorClass divisor_from_json(const json& j) {
  if (!j.is_object() || !j.contains("a") || !j.contains("t") || !j["a"].is_number_integer() ||
      !j["t"].is_array() || j["t"].size() != lattice::kRationalCurves) {
    throw Error(ErrorKind::invalid_argument,
                "divisor class must be {\"a\": int, \"t\": [8 ints]}, got " + j.dump());
  }
  DivisorClass::Doubled t{};
  for (std::size_t i = 0; i < lattice::kRationalCurves; ++i) {
    if (!j["t"][i].is_number_integer()) {
      throw Error(ErrorKind::invalid_argument, "t entries must be integers");
    }
    t[i] = j["t"][i].get<long long>();
  }
  return DivisorClass(j["a"].get<long long>(), t);
}

DivisorClass parse_divisor(std::string_view text) {
  if (!text.empty() && text.front() == '{') {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) {
      throw Error(ErrorKind::invalid_argument, "malformed JSON: " + std::string(text));
    }
    return divisor_from_json(j);
  }
  if (text == "L") return DivisorClass::polarization();
  if (text == "e") return DivisorClass::half_sum();
  if (text == "0") return DivisorClass{};
  if (text.size() >= 2 && text[0] == 'R') {
    return DivisorClass::rational_curve(static_cast<std::size_t>(parse_integer(text.substr(1))));
  }
  if (text.size() >= 3 && text.substr(0, 2) == "L_") {
    return DivisorClass::twisted_polarization(parse_integer(text.substr(2)));
  }
  throw Error(ErrorKind::invalid_argument, "unrecognized divisor '" + std::string(text) + "'");
}

chow::BaseClass base_class_from_json(const json& j) {
  if (!j.is_object()) throw Error(ErrorKind::invalid_argument, "base class must be an object");
  chow::BaseClass x;
  x.scalar_part() = parse_rational(j.at("scalar").get<std::string>());
  for (std::size_t i = 0; i < chow::kSymbols; ++i) {
    const auto s = static_cast<Symbol>(i);
    x[s] = parse_rational(j.at(std::string(chow::to_string(s))).get<std::string>());
  }
  if (j.value("truncated", false)) x.mark_truncated();
  return x;
}

}  // namespace nikulin::serialize
