#pragma once

// Formal intersection theory on the universal Nikulin surface π: X → F.
//
// FiberPoly is the truncated graded ring Q[ℓ, ε, t₂, Λ, A, B] / (deg > 3),
// where ℓ = c₁(𝓛), ε = c₁(𝓔), t₂ = c₂(T_π) live on X and Λ, A, B are the
// pullbacks of λ, α, β from F; t₂ has degree 2, every other generator degree 1.
// BaseClass holds the codimension-0 and codimension-1 part of a class on F.

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string_view>

#include "nikulin/rational.hpp"

namespace nikulin::chow {

enum class Generator : std::uint8_t { ell, eps, t2, hodge, alpha, beta };
inline constexpr std::size_t kGenerators = 6;

struct Monomial {
  std::array<std::uint8_t, kGenerators> exponents{};

  static Monomial of(Generator gen, std::uint8_t power = 1);

  std::uint8_t operator[](Generator gen) const {
    return exponents[static_cast<std::size_t>(gen)];
  }
  int degree() const noexcept;
  /// Degree in the base generators Λ, A, B.
  int base_degree() const noexcept;
  Monomial operator*(const Monomial& other) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

class FiberPoly {
 public:
  static constexpr int kMaxDegree = 3;
  using Terms = std::map<Monomial, Rational>;

  FiberPoly() = default;
  explicit FiberPoly(const Rational& constant);
  static FiberPoly generator(Generator gen);
  static FiberPoly monomial(const Monomial& mono, const Rational& coefficient = 1);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Rational coefficient(const Monomial& mono) const;
  FiberPoly homogeneous_part(int degree) const;

  FiberPoly& operator+=(const FiberPoly& other);
  FiberPoly& operator-=(const FiberPoly& other);
  FiberPoly& operator*=(const FiberPoly& other);
  FiberPoly& operator*=(const Rational& scalar);

  friend FiberPoly operator+(FiberPoly x, const FiberPoly& y) { return x += y; }
  friend FiberPoly operator-(FiberPoly x, const FiberPoly& y) { return x -= y; }
  friend FiberPoly operator*(FiberPoly x, const FiberPoly& y) { return x *= y; }
  friend FiberPoly operator*(const Rational& s, FiberPoly x) { return x *= s; }
  friend bool operator==(const FiberPoly&, const FiberPoly&) = default;

 private:
  void add_term(const Monomial& mono, const Rational& coefficient);
  Terms terms_;
};

FiberPoly pow(const FiberPoly& x, unsigned n);

/// Codimension-1 symbols of CH¹(F), in storage order.
enum class Symbol : std::uint8_t { k300, k210, k120, k030, k101, k011, hodge, alpha, beta };
inline constexpr std::size_t kSymbols = 9;
inline constexpr std::array<Symbol, 6> kKappaSymbols{Symbol::k300, Symbol::k210, Symbol::k120,
                                                     Symbol::k030, Symbol::k101, Symbol::k011};
std::string_view to_string(Symbol symbol) noexcept;

class BaseClass {
 public:
  BaseClass() = default;
  static BaseClass of(Symbol symbol, const Rational& coefficient = 1);
  static BaseClass scalar(const Rational& value);

  const Rational& operator[](Symbol symbol) const {
    return coefficients_[static_cast<std::size_t>(symbol)];
  }
  Rational& operator[](Symbol symbol) { return coefficients_[static_cast<std::size_t>(symbol)]; }
  const Rational& scalar_part() const noexcept { return scalar_; }
  Rational& scalar_part() noexcept { return scalar_; }

  /// Set when a pushforward or product dropped a contribution of codimension ≥ 2.
  bool truncated() const noexcept { return truncated_; }
  void mark_truncated() noexcept { truncated_ = true; }

  bool is_zero() const;
  /// Number of nonzero entries, counting the scalar slot.
  std::size_t support_size() const;

  /// Product with a base generator (Λ, A or B); codim-1 parts become codim 2
  /// and are dropped with the truncation flag.
  BaseClass times(Generator base_generator) const;

  BaseClass& operator+=(const BaseClass& other);
  BaseClass& operator-=(const BaseClass& other);
  BaseClass& operator*=(const Rational& scalar);

  friend BaseClass operator+(BaseClass x, const BaseClass& y) { return x += y; }
  friend BaseClass operator-(BaseClass x, const BaseClass& y) { return x -= y; }
  friend BaseClass operator*(const Rational& s, BaseClass x) { return x *= s; }

  /// Coefficient-wise; the truncation flag is metadata and not compared.
  friend bool operator==(const BaseClass& x, const BaseClass& y) {
    return x.scalar_ == y.scalar_ && x.coefficients_ == y.coefficients_;
  }

 private:
  Rational scalar_;
  std::array<Rational, kSymbols> coefficients_{};
  bool truncated_ = false;
};

/// π_* into codimension ≤ 1, using κ_{2,0,0} = 2g−2, κ_{0,2,0} = −4,
/// κ_{1,1,0} = 0 and κ_{0,0,1} = 24.
BaseClass pushforward(const FiberPoly& poly, long long g);

/// ch of the line class n·(xℓ + yε), truncated at degree 3.
FiberPoly chern_character(const Rational& x, const Rational& y, long long n);

/// td(T_π) with c₁(T_π) = −Λ and c₂(T_π) = t₂.
FiberPoly todd_relative();

/// rk π_*(𝓛_m^{⊗n}) = n²(g_m − 1) + 2.
long long bundle_rank(long long n, long long m, long long g);

/// Closed form of c₁(π_*𝓛_m^{⊗n}) in the κ/λ basis.
BaseClass grr_closed_form(long long n, long long m, long long g);

/// c₁(π_*𝓛_m^{⊗n}) computed by the ring engine and checked against
/// grr_closed_form; Error(derivation_failure) on any difference.
BaseClass c1_pushforward_bundle(long long n, long long m, long long g);

/// κ' = π_*((ℓ + wα·A)^a (ε + wβ·B)^b t₂^c) for the six codim-1 κ symbols.
std::map<Symbol, BaseClass> twist_kappas(const Rational& alpha_weight, const Rational& beta_weight,
                                         long long g);

/// Replace each κ symbol of x by its image; λ, α, β and the scalar stay.
BaseClass substitute_kappas(const BaseClass& x, const std::map<Symbol, BaseClass>& images);

/// γ₀..γ₃ in the κ basis.
BaseClass gamma_class(int index, long long g);

/// True iff every γ_i has vanishing α and β parts after the twist.
bool gamma_invariance_check(long long g);

struct GammaCoefficients {
  std::array<Rational, 4> gamma{};
  Rational hodge;
  BaseClass residual;

  /// Σ c_i γ_i + c_λ λ + residual.
  BaseClass reconstruct(long long g) const;
};

GammaCoefficients gamma_basis_reduce(const BaseClass& x, long long g);

struct DivisorClassResult {
  long long g = 0;
  long long m = 0;
  long long twisted_genus = 0;
  BaseClass kappa_form;         // c₁(U₂) − 2(rk U₂ / rk U₁)c₁(U₁)
  GammaCoefficients normalized;  // coefficients before the A_m scale
  BigInt scale;                  // A_m = A^{g_m−3}_{g_m+1}

  std::array<Rational, 5> scaled() const;
};

/// True for 0 ≤ m ≤ k−1, or m = k with p ≥ 3 (and g_m ≥ 3).
bool divisor_class_admissible(long long g, long long m);

/// Error(out_of_range) outside the admissible range, Error(theorem_check_failure)
/// if the reduction leaves a residual or the coefficients differ from
/// (2, −6m, m², −m³)/(g_m+1) and 2g_m − 1.
DivisorClassResult divisor_class(long long g, long long m);

}  // namespace nikulin::chow
