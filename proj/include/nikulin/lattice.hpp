#pragma once

// Lattice Z·L ⊕ N of a polarized Nikulin surface of genus g.
//
// A class is stored as D = a·L + Σ_i (t_i / 2)·R_i with integer a and doubled
// coefficients t_1..t_8. Membership in the lattice is the parity condition
// "all t_i even or all t_i odd" (e = ½ΣR_i has t = (1,…,1)). The Z-basis used
// for the Gram matrix is (L, e, R_1, …, R_7); R_8 = 2e − R_1 − … − R_7.

#include <array>
#include <compare>
#include <cstddef>

namespace nikulin::lattice {

inline constexpr std::size_t kRationalCurves = 8;
inline constexpr std::size_t kRank = 9;

/// g = 2k² + p with k ≥ 1 and 0 ≤ p < 4k + 2.
struct GenusProfile {
  long long g = 0;
  long long k = 0;
  long long p = 0;

  /// Sectional genus of L_m = L − m·e.
  constexpr long long twisted_genus(long long m) const noexcept { return g - 2 * m * m; }

  friend constexpr bool operator==(const GenusProfile&, const GenusProfile&) = default;
};

/// Throws Error(invalid_genus) for g < 2.
GenusProfile decompose_profile(long long g);

class DivisorClass {
 public:
  using Doubled = std::array<long long, kRationalCurves>;

  /// The zero class.
  DivisorClass() = default;
  /// Throws Error(invalid_class) when the t_i do not share a parity.
  DivisorClass(long long a, const Doubled& t);

  static DivisorClass polarization();                     // L
  static DivisorClass half_sum();                         // e
  static DivisorClass rational_curve(std::size_t index);  // R_index, 1-based
  static DivisorClass twisted_polarization(long long m);  // L_m = L − m·e

  long long a() const noexcept { return a_; }
  const Doubled& t() const noexcept { return t_; }
  long long t(std::size_t index) const { return t_.at(index - 1); }
  bool odd_coefficients() const noexcept { return (t_[0] & 1) != 0; }
  bool is_zero() const noexcept;

  DivisorClass operator-() const;
  DivisorClass& operator+=(const DivisorClass& other);
  DivisorClass& operator-=(const DivisorClass& other);
  DivisorClass& operator*=(long long n);

  friend DivisorClass operator+(DivisorClass x, const DivisorClass& y) { return x += y; }
  friend DivisorClass operator-(DivisorClass x, const DivisorClass& y) { return x -= y; }
  friend DivisorClass operator*(long long n, DivisorClass x) { return x *= n; }

  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
  friend auto operator<=>(const DivisorClass&, const DivisorClass&) = default;

 private:
  long long a_ = 0;
  Doubled t_{};
};

/// Coordinates of D in the ordered basis (L, e, R_1, …, R_7).
std::array<long long, kRank> basis_coordinates(const DivisorClass& d);

/// Inverse of basis_coordinates.
DivisorClass from_basis_coordinates(const std::array<long long, kRank>& coords);

struct GramMatrix {
  long long genus = 0;
  std::array<std::array<long long, kRank>, kRank> entries{};

  long long operator()(std::size_t i, std::size_t j) const { return entries.at(i).at(j); }
};

/// Throws Error(invalid_genus) for g < 2.
GramMatrix gram_matrix(long long g);

long long intersect(const DivisorClass& d1, const DivisorClass& d2, long long g);
inline long long self_intersection(const DivisorClass& d, long long g) { return intersect(d, d, g); }

/// 1 + D²/2; requires D² ≥ −2 (Error(out_of_range) otherwise).
long long sectional_genus(const DivisorClass& d, long long g);

/// χ(D) = 2 + D²/2 on a K3 surface.
long long riemann_roch_chi(const DivisorClass& d, long long g);

/// True iff D = 2D' for some D' in the lattice.
bool is_two_divisible(const DivisorClass& d) noexcept;

/// True iff the basis coordinates of a nonzero D have gcd 1.
bool is_primitive(const DivisorClass& d) noexcept;

/// |det| of the Gram block on (e, R_1, …, R_7); independent of g.
long long nikulin_block_determinant(long long g);

/// Leading principal minors of the (e, R_1, …, R_7) block, sizes 1..8.
std::array<long long, kRationalCurves> nikulin_block_leading_minors();

}  // namespace nikulin::lattice
