#pragma once

// Independent reference computations for the tests. Nothing here calls into
// the code paths it is used to check.

#include <array>
#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "nikulin/lattice.hpp"

namespace oracle {

using nikulin::lattice::DivisorClass;
using BigInt = boost::multiprecision::cpp_int;

/// Bilinear expansion in (L, R_1, …, R_8) with b_i = t_i/2:
/// D·D' = aa'(2g−2) − 2Σ b_i b'_i.
inline long long intersect(const DivisorClass& x, const DivisorClass& y, long long g) {
  long long dot = 0;
  for (std::size_t i = 0; i < 8; ++i) dot += x.t()[i] * y.t()[i];
  return x.a() * y.a() * (2 * g - 2) - dot / 2;
}

/// Plain scan for k with 2k² ≤ g < 2(k+1)².
inline std::pair<long long, long long> profile(long long g) {
  for (long long k = 1;; ++k) {
    if (2 * k * k <= g && g < 2 * (k + 1) * (k + 1)) return {k, g - 2 * k * k};
  }
}

/// Laplace expansion along the first row.
inline long long cofactor_determinant(const std::vector<std::vector<long long>>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  long long det = 0;
  for (std::size_t col = 0; col < n; ++col) {
    if (m[0][col] == 0) continue;
    std::vector<std::vector<long long>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<long long> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != col) row.push_back(m[r][c]);
      minor.push_back(row);
    }
    const long long sign = (col % 2 == 0) ? 1 : -1;
    det += sign * m[0][col] * cofactor_determinant(minor);
  }
  return det;
}

/// Gram block of (e, R_1, …, R_7), written out from e² = −4, e·R_i = −1,
/// R_i² = −2, R_i·R_j = 0.
inline std::vector<std::vector<long long>> nikulin_block(std::size_t n = 8) {
  std::vector<std::vector<long long>> m(n, std::vector<long long>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == 0 && j == 0) m[i][j] = -4;
      else if (i == 0 || j == 0) m[i][j] = -1;
      else if (i == j) m[i][j] = -2;
    }
  }
  return m;
}

/// Binomials from Pascal's triangle in Boost big integers.
class Pascal {
 public:
  explicit Pascal(std::size_t rows) : rows_(rows + 1) {
    for (std::size_t n = 0; n <= rows; ++n) {
      rows_[n].assign(n + 1, 1);
      for (std::size_t k = 1; k < n; ++k) rows_[n][k] = rows_[n - 1][k - 1] + rows_[n - 1][k];
    }
  }
  const BigInt& operator()(std::size_t n, std::size_t k) const { return rows_.at(n).at(k); }

 private:
  std::vector<std::vector<BigInt>> rows_;
};

struct DetDegree {
  BigInt value;
  bool integral = false;
};

inline DetDegree det_degree(const Pascal& binom, std::size_t r, std::size_t e) {
  BigInt num = 1, den = 1;
  for (std::size_t i = 0; i < r; ++i) {
    num *= binom(e + i, r - i);
    den *= binom(2 * i + 1, i);
  }
  return DetDegree{num / den, num % den == 0};
}

/// Canonical order: a ascending, then −t lexicographically ascending.
inline bool canonical_less(const DivisorClass& x, const DivisorClass& y) {
  if (x.a() != y.a()) return x.a() < y.a();
  for (std::size_t i = 0; i < 8; ++i)
    if (x.t()[i] != y.t()[i]) return x.t()[i] > y.t()[i];
  return false;
}

/// Every parity-valid t in [lo, hi]⁸, no pruning.
template <class F>
void for_each_box(long long lo, long long hi, F&& f) {
  DivisorClass::Doubled t;
  t.fill(lo);
  while (true) {
    bool same = true;
    for (long long x : t) same = same && ((x & 1) == (t[0] & 1));
    if (same) f(t);
    std::size_t i = 0;
    while (i < 8 && t[i] == hi) t[i++] = lo;
    if (i == 8) return;
    ++t[i];
  }
}

inline long long gcd_coords(const DivisorClass& d) {
  // Basis (L, e, R_1..R_7) coordinates, spelled out independently.
  std::array<long long, 9> c{d.a(), d.t()[7]};
  for (std::size_t i = 0; i < 7; ++i) c[i + 2] = (d.t()[i] - d.t()[7]) / 2;
  long long acc = 0;
  for (long long x : c) {
    long long y = x < 0 ? -x : x;
    while (y != 0) {
      long long r = acc % y;
      acc = y;
      y = r;
    }
  }
  return acc;
}

/// Random class with |a| ≤ 20 and |t_i| ≤ 20 sharing a parity.
inline DivisorClass random_class(std::mt19937_64& rng) {
  std::uniform_int_distribution<long long> coeff(-20, 20);
  std::uniform_int_distribution<int> bit(0, 1);
  const long long parity = bit(rng);
  DivisorClass::Doubled t;
  for (auto& x : t) x = 2 * (coeff(rng) / 2) + parity;
  return DivisorClass(coeff(rng), t);
}

}  // namespace oracle
