#pragma once

// Positivity and Brill–Noether checks for the twisted polarizations L_m.
//
// Searches run over a finite coefficient window and test necessary conditions
// for effectivity only (D·R_i ≥ 0 for irreducible curves other than the R_i,
// D·L > 0, χ ≥ 2 for movable classes). Every answer they give is therefore
// "within bounds, at the level of necessary conditions".

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nikulin/lattice.hpp"
#include "nikulin/rational.hpp"

namespace nikulin::positivity {

using lattice::DivisorClass;

/// Window 1 ≤ a ≤ a_max (or 0 ≤ a where a search allows it), |t_i| ≤ t_max.
struct SearchBounds {
  long long a_max = 2;
  long long t_max = 10;

  /// Throws Error(invalid_bounds) unless a_max ≥ 1 and t_max ≥ 0.
  void validate() const;

  friend bool operator==(const SearchBounds&, const SearchBounds&) = default;
};

enum class Status { ample, very_ample, obstructed, out_of_range };
std::string_view to_string(Status status) noexcept;

struct PositivityVerdict {
  Status status = Status::out_of_range;
  std::optional<DivisorClass> witness;  // present iff status == obstructed
  std::string rationale;
};

/// Left-hand side (g−1)(g_m−1)/m² of the a = 1 ampleness inequality.
Rational ampleness_quantity(long long g, long long m);

/// (g−1)(g_m−1)/m² > 2. Requires 1 ≤ m ≤ k; m = 0 or m > k is Error(out_of_range).
bool ampleness_analytic_check(long long g, long long m);

/// First D (in canonical order) with 1 ≤ a ≤ a_max, |t_i| ≤ t_max, D² = −2,
/// D·R_i ≥ 0 for all i, and D·L_m ≤ 0. Requires 0 ≤ m ≤ k.
std::optional<DivisorClass> rational_obstruction_search(long long g, long long m,
                                                        const SearchBounds& bounds);

/// Every class satisfying the rational_obstruction_search conditions, in canonical order.
std::vector<DivisorClass> rational_obstruction_witnesses(long long g, long long m,
                                                         const SearchBounds& bounds);

/// (2g² − 8g + 7)/(2g − 2).
Rational very_ample_threshold(long long g);

/// Square-free form of f(T) < 1: g − T − 2 > 0 and (g−1+T)/(2g−2) < (g−T−2)².
bool square_free_threshold_holds(long long g, long long twist);

/// Very ampleness of L_m from the threshold and the 2-divisibility test.
/// Throws Error(internal_inconsistency) if the two threshold forms disagree.
PositivityVerdict very_ample_check(long long g, long long m);

enum class SystemKind { rational_fixed_curve, basepoint_free };
std::string_view to_string(SystemKind kind) noexcept;

struct LinearSystemSummary {
  long long h0 = 0;
  SystemKind kind = SystemKind::basepoint_free;
};

/// h⁰(L_k) = p + 1 and the moving/fixed dichotomy of |L_k|.
LinearSystemSummary lk_system_analysis(long long g);

using ClassPair = std::pair<DivisorClass, DivisorClass>;

/// All unordered splittings target = D1 + D2 with both summands inside the
/// window, a_i ≥ 0, D_i·L > 0 and χ(D_i) ≥ 2. Each pair is listed once, with
/// D1 ≤ D2 in canonical order.
std::vector<ClassPair> movable_decomposition_search(long long g, const DivisorClass& target,
                                                    const SearchBounds& bounds);

enum class NlCondition {
  elliptic_degree_one,        // (a) E² = 0, E·L_m = 1
  elliptic_degree_two,        // (b) E² = 0, E·L_m = 2
  orthogonal_rational_curve,  // (c) Γ² = −2, Γ·L_m = 0
};

/// "a", "b" or "c"; anything else is Error(invalid_argument).
NlCondition parse_nl_condition(std::string_view tag);
std::string_view to_string(NlCondition condition) noexcept;

std::optional<DivisorClass> noether_lefschetz_condition_search(long long g, long long m,
                                                               NlCondition condition,
                                                               const SearchBounds& bounds);

struct CliffordData {
  long long genus = 0;
  long long max_clifford = 0;
};

/// floor((genus−1)/2) for genus ≥ 3 (the non-hyperelliptic value at genus 3), 0 below.
CliffordData clifford_max(long long genus);

struct EmbeddingData {
  long long ambient_dim = 0;
  long long curve_genus = 0;
  long long curve_degree = 0;
};

/// Image of a smooth D ∈ |L_{m+1}| under φ_{L_m} for 1 ≤ m ≤ k−1.
EmbeddingData embedding_data(long long g, long long m);

/// Canonical search order: a ascending, then (−t_1, …, −t_8) lexicographically.
bool canonical_less(const DivisorClass& x, const DivisorClass& y) noexcept;

}  // namespace nikulin::positivity
