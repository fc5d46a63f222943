#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace nikulin {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Canonical "p/q" rendering: q > 0, gcd(p, q) = 1, and integers keep the "/1".
std::string to_string(const Rational& q);
std::string to_string(const BigInt& z);

/// Accepts "p/q" or a bare integer; throws Error(invalid_argument) otherwise.
Rational parse_rational(std::string_view text);

inline Rational make_rational(long long num, long long den = 1) {
  static_assert(sizeof(long) == sizeof(long long), "LP64 platform expected");
  Rational q(BigInt(static_cast<long>(num)), BigInt(static_cast<long>(den)));
  q.canonicalize();
  return q;
}

}  // namespace nikulin
