#include "nikulin/lattice.hpp"

#include <cstdlib>
#include <numeric>
#include <string>

#include "nikulin/errors.hpp"

namespace nikulin::lattice {

namespace {

using Block = std::array<std::array<long long, kRationalCurves>, kRationalCurves>;

void require_genus(long long g) {
  if (g < 2) throw Error(ErrorKind::invalid_genus, "genus must be >= 2, got " + std::to_string(g));
}

Block nikulin_block() {
  const GramMatrix gram = gram_matrix(2);
  Block block{};
  for (std::size_t i = 0; i < kRationalCurves; ++i)
    for (std::size_t j = 0; j < kRationalCurves; ++j) block[i][j] = gram(i + 1, j + 1);
  return block;
}

// Fraction-free Gaussian elimination on the leading n×n submatrix.
long long bareiss_determinant(Block m, std::size_t n) {
  long long sign = 1;
  long long previous = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(m[k], m[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / previous;
      }
    }
    previous = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

}  // namespace

GenusProfile decompose_profile(long long g) {
  require_genus(g);
  long long k = 1;
  while (2 * (k + 1) * (k + 1) <= g) ++k;
  return GenusProfile{g, k, g - 2 * k * k};
}

DivisorClass::DivisorClass(long long a, const Doubled& t) : a_(a), t_(t) {
  const long long parity = t_[0] & 1;
  for (long long ti : t_) {
    if ((ti & 1) != parity) {
      throw Error(ErrorKind::invalid_class,
                  "doubled R_i-coefficients must be all even or all odd");
    }
  }
}

DivisorClass DivisorClass::polarization() { return DivisorClass(1, Doubled{}); }

DivisorClass DivisorClass::half_sum() {
  Doubled t;
  t.fill(1);
  return DivisorClass(0, t);
}

DivisorClass DivisorClass::rational_curve(std::size_t index) {
  if (index < 1 || index > kRationalCurves) {
    throw Error(ErrorKind::invalid_argument,
                "rational curve index must be in 1..8, got " + std::to_string(index));
  }
  Doubled t{};
  t[index - 1] = 2;
  return DivisorClass(0, t);
}

DivisorClass DivisorClass::twisted_polarization(long long m) {
  Doubled t;
  t.fill(-m);
  return DivisorClass(1, t);
}

bool DivisorClass::is_zero() const noexcept {
  if (a_ != 0) return false;
  for (long long ti : t_)
    if (ti != 0) return false;
  return true;
}

DivisorClass DivisorClass::operator-() const {
  DivisorClass r = *this;
  r *= -1;
  return r;
}

DivisorClass& DivisorClass::operator+=(const DivisorClass& other) {
  a_ += other.a_;
  for (std::size_t i = 0; i < kRationalCurves; ++i) t_[i] += other.t_[i];
  return *this;
}

DivisorClass& DivisorClass::operator-=(const DivisorClass& other) {
  a_ -= other.a_;
  for (std::size_t i = 0; i < kRationalCurves; ++i) t_[i] -= other.t_[i];
  return *this;
}

DivisorClass& DivisorClass::operator*=(long long n) {
  a_ *= n;
  for (long long& ti : t_) ti *= n;
  return *this;
}

std::array<long long, kRank> basis_coordinates(const DivisorClass& d) {
  // Σ (t_i/2) R_i = t_8·e + Σ_{i<8} ((t_i − t_8)/2) R_i, using R_8 = 2e − ΣR_{i<8}.
  const auto& t = d.t();
  std::array<long long, kRank> c{};
  c[0] = d.a();
  c[1] = t[7];
  for (std::size_t i = 0; i + 1 < kRationalCurves; ++i) c[i + 2] = (t[i] - t[7]) / 2;
  return c;
}

DivisorClass from_basis_coordinates(const std::array<long long, kRank>& c) {
  DivisorClass::Doubled t;
  t[7] = c[1];
  for (std::size_t i = 0; i + 1 < kRationalCurves; ++i) t[i] = 2 * c[i + 2] + c[1];
  return DivisorClass(c[0], t);
}

GramMatrix gram_matrix(long long g) {
  require_genus(g);
  GramMatrix gram;
  gram.genus = g;
  auto& m = gram.entries;
  m[0][0] = 2 * g - 2;
  m[1][1] = -4;
  for (std::size_t i = 2; i < kRank; ++i) {
    m[i][i] = -2;
    m[1][i] = m[i][1] = -1;
  }
  return gram;
}

long long intersect(const DivisorClass& d1, const DivisorClass& d2, long long g) {
  const GramMatrix gram = gram_matrix(g);
  const auto x = basis_coordinates(d1);
  const auto y = basis_coordinates(d2);
  long long sum = 0;
  for (std::size_t i = 0; i < kRank; ++i)
    for (std::size_t j = 0; j < kRank; ++j) sum += x[i] * gram(i, j) * y[j];
  return sum;
}

long long sectional_genus(const DivisorClass& d, long long g) {
  const long long sq = self_intersection(d, g);
  if (sq % 2 != 0) {
    throw Error(ErrorKind::internal_inconsistency, "odd self-intersection in an even lattice");
  }
  if (sq < -2) {
    throw Error(ErrorKind::out_of_range,
                "sectional genus needs D^2 >= -2, got " + std::to_string(sq));
  }
  return 1 + sq / 2;
}

long long riemann_roch_chi(const DivisorClass& d, long long g) {
  return 2 + self_intersection(d, g) / 2;
}

bool is_two_divisible(const DivisorClass& d) noexcept {
  if (d.a() % 2 != 0) return false;
  const long long residue = ((d.t()[0] % 4) + 4) % 4;
  if (residue != 0 && residue != 2) return false;
  for (long long ti : d.t())
    if (((ti % 4) + 4) % 4 != residue) return false;
  return true;
}

bool is_primitive(const DivisorClass& d) noexcept {
  long long acc = 0;
  for (long long c : basis_coordinates(d)) acc = std::gcd(acc, std::llabs(c));
  return acc == 1;
}

long long nikulin_block_determinant(long long g) {
  require_genus(g);
  return std::llabs(bareiss_determinant(nikulin_block(), kRationalCurves));
}

std::array<long long, kRationalCurves> nikulin_block_leading_minors() {
  const Block block = nikulin_block();
  std::array<long long, kRationalCurves> minors{};
  for (std::size_t n = 1; n <= kRationalCurves; ++n) minors[n - 1] = bareiss_determinant(block, n);
  return minors;
}

}  // namespace nikulin::lattice
