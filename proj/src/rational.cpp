#include "nikulin/rational.hpp"

#include "nikulin/errors.hpp"

namespace nikulin {

std::string to_string(const Rational& q) {
  Rational c(q);
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

std::string to_string(const BigInt& z) { return z.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string s(text);
  Rational q;
  if (s.empty() || q.set_str(s, 10) != 0 || q.get_den() == 0) {
    throw Error(ErrorKind::invalid_argument, "not a rational number: '" + s + "'");
  }
  q.canonicalize();
  return q;
}

}  // namespace nikulin
