#include "nikulin/positivity.hpp"

#include <algorithm>
#include <string>

#include "coefficient_window.hpp"
#include "nikulin/errors.hpp"

namespace nikulin::positivity {

using lattice::decompose_profile;
using lattice::intersect;
using lattice::kRationalCurves;

namespace {

void require_twist_range(long long g, long long m, long long lowest, long long highest,
                         const char* what) {
  if (m < lowest || m > highest) {
    throw Error(ErrorKind::out_of_range, std::string(what) + ": m = " + std::to_string(m) +
                                             " outside " + std::to_string(lowest) + ".." +
                                             std::to_string(highest) + " for g = " +
                                             std::to_string(g));
  }
}

detail::CoefficientWindow uniform_window(long long lo, long long hi) {
  detail::CoefficientWindow w;
  w.lo.fill(lo);
  w.hi.fill(hi);
  return w;
}

}  // namespace

void SearchBounds::validate() const {
  if (a_max < 1 || t_max < 0) {
    throw Error(ErrorKind::invalid_bounds, "search bounds need a_max >= 1 and t_max >= 0, got a_max = " +
                                               std::to_string(a_max) +
                                               ", t_max = " + std::to_string(t_max));
  }
}

std::string_view to_string(Status status) noexcept {
  switch (status) {
    case Status::ample: return "ample";
    case Status::very_ample: return "very-ample";
    case Status::obstructed: return "obstructed";
    case Status::out_of_range: return "out-of-range";
  }
  return "unknown";
}

std::string_view to_string(SystemKind kind) noexcept {
  switch (kind) {
    case SystemKind::rational_fixed_curve: return "rational-fixed-curve";
    case SystemKind::basepoint_free: return "basepoint-free-pencil-or-more";
  }
  return "unknown";
}

std::string_view to_string(NlCondition condition) noexcept {
  switch (condition) {
    case NlCondition::elliptic_degree_one: return "a";
    case NlCondition::elliptic_degree_two: return "b";
    case NlCondition::orthogonal_rational_curve: return "c";
  }
  return "?";
}

NlCondition parse_nl_condition(std::string_view tag) {
  if (tag == "a") return NlCondition::elliptic_degree_one;
  if (tag == "b") return NlCondition::elliptic_degree_two;
  if (tag == "c") return NlCondition::orthogonal_rational_curve;
  throw Error(ErrorKind::invalid_argument,
              "unknown Noether-Lefschetz condition '" + std::string(tag) + "' (expected a, b or c)");
}

bool canonical_less(const DivisorClass& x, const DivisorClass& y) noexcept {
  if (x.a() != y.a()) return x.a() < y.a();
  for (std::size_t i = 0; i < kRationalCurves; ++i) {
    if (x.t()[i] != y.t()[i]) return x.t()[i] > y.t()[i];
  }
  return false;
}

Rational ampleness_quantity(long long g, long long m) {
  const auto profile = decompose_profile(g);
  require_twist_range(g, m, 1, profile.k, "ampleness check");
  return make_rational((g - 1) * (profile.twisted_genus(m) - 1), m * m);
}

bool ampleness_analytic_check(long long g, long long m) {
  return ampleness_quantity(g, m) > 2;
}

namespace {

// Visits obstruction candidates in canonical order until visit returns true.
template <class Visitor>
void visit_rational_obstructions(long long g, long long m, const SearchBounds& bounds,
                                 Visitor&& visit) {
  bounds.validate();
  const auto profile = decompose_profile(g);
  require_twist_range(g, m, 0, profile.k, "rational obstruction search");
  // With a ≥ 1 and m = 0, D·L = a(2g−2) > 0.
  if (m == 0) return;

  const DivisorClass twisted = DivisorClass::twisted_polarization(m);
  for (long long a = 1; a <= bounds.a_max; ++a) {
    // D·R_i = −t_i ≥ 0; D² = 2a²(g−1) − Σt²/2 = −2; D·L_m = a(2g−2) + mΣt/2 ≤ 0.
    auto window = uniform_window(-bounds.t_max, 0);
    window.norm_min = window.norm_max = 4 * a * a * (g - 1) + 4;
    window.sum_max = -((4 * a * (g - 1) + m - 1) / m);

    const bool stop = detail::visit_window(window, [&](const DivisorClass::Doubled& t) {
      DivisorClass d(a, t);
      if (intersect(d, d, g) != -2 || intersect(d, twisted, g) > 0) {
        throw Error(ErrorKind::internal_inconsistency, "window produced an inadmissible class");
      }
      return visit(d);
    });
    if (stop) return;
  }
}

}  // namespace

std::optional<DivisorClass> rational_obstruction_search(long long g, long long m,
                                                        const SearchBounds& bounds) {
  std::optional<DivisorClass> found;
  visit_rational_obstructions(g, m, bounds, [&](const DivisorClass& d) {
    found = d;
    return true;
  });
  return found;
}

std::vector<DivisorClass> rational_obstruction_witnesses(long long g, long long m,
                                                         const SearchBounds& bounds) {
  std::vector<DivisorClass> all;
  visit_rational_obstructions(g, m, bounds, [&](const DivisorClass& d) {
    all.push_back(d);
    return false;
  });
  return all;
}

Rational very_ample_threshold(long long g) {
  if (g < 2) throw Error(ErrorKind::invalid_genus, "threshold needs g >= 2");
  return make_rational(2 * g * g - 8 * g + 7, 2 * g - 2);
}

bool square_free_threshold_holds(long long g, long long twist) {
  if (g < 2) throw Error(ErrorKind::invalid_genus, "threshold needs g >= 2");
  const long long gap = g - twist - 2;
  if (gap <= 0) return false;
  return make_rational(g - 1 + twist, 2 * g - 2) < make_rational(gap) * make_rational(gap);
}

PositivityVerdict very_ample_check(long long g, long long m) {
  const auto profile = decompose_profile(g);
  if (m < 1 || m > profile.k) {
    return PositivityVerdict{Status::out_of_range, std::nullopt, "twist-outside-1..k"};
  }
  const long long twist = 2 * m * m;
  const bool below_threshold = make_rational(twist) < very_ample_threshold(g);
  if (below_threshold != square_free_threshold_holds(g, twist)) {
    throw Error(ErrorKind::internal_inconsistency,
                "threshold form and square-free form disagree at g = " + std::to_string(g) +
                    ", T = " + std::to_string(twist));
  }
  const DivisorClass lm = DivisorClass::twisted_polarization(m);
  const bool divisible = lattice::is_two_divisible(lm);
  if (below_threshold && !divisible) {
    return PositivityVerdict{Status::very_ample, std::nullopt, "saint-donat-threshold"};
  }
  if (ampleness_analytic_check(g, m)) {
    return PositivityVerdict{Status::ample, std::nullopt,
                             divisible ? "two-divisible" : "threshold-fails"};
  }
  const long long square = lattice::self_intersection(lm, g);
  if (square == -2) return PositivityVerdict{Status::obstructed, lm, "fixed-rational-curve"};
  if (square == 0) return PositivityVerdict{Status::obstructed, lm, "elliptic-pencil"};
  if (auto witness = rational_obstruction_search(g, m, SearchBounds{})) {
    return PositivityVerdict{Status::obstructed, *witness, "rational-curve-obstruction"};
  }
  throw Error(ErrorKind::internal_inconsistency,
              "ampleness inequality fails but no obstruction found at g = " + std::to_string(g) +
                  ", m = " + std::to_string(m));
}

LinearSystemSummary lk_system_analysis(long long g) {
  const auto profile = decompose_profile(g);
  const long long chi =
      lattice::riemann_roch_chi(DivisorClass::twisted_polarization(profile.k), g);
  if (chi != profile.p + 1) {
    throw Error(ErrorKind::internal_inconsistency, "chi(L_k) != p + 1");
  }
  return LinearSystemSummary{
      chi, profile.p == 0 ? SystemKind::rational_fixed_curve : SystemKind::basepoint_free};
}

std::vector<ClassPair> movable_decomposition_search(long long g, const DivisorClass& target,
                                                    const SearchBounds& bounds) {
  bounds.validate();
  decompose_profile(g);
  std::vector<ClassPair> pairs;
  const long long tm = bounds.t_max;
  for (long long a1 = 1; a1 <= bounds.a_max; ++a1) {
    const long long a2 = target.a() - a1;
    if (a2 < 1 || a2 > bounds.a_max) continue;
    detail::CoefficientWindow window;
    for (std::size_t i = 0; i < kRationalCurves; ++i) {
      window.lo[i] = std::max(-tm, target.t()[i] - tm);
      window.hi[i] = std::min(tm, target.t()[i] + tm);
    }
    // χ(D1) ≥ 2 ⇔ D1² ≥ 0 ⇔ Σt² ≤ 4a1²(g−1).
    window.norm_max = 4 * a1 * a1 * (g - 1);
    detail::visit_window(window, [&](const DivisorClass::Doubled& t) {
      const DivisorClass d1(a1, t);
      const DivisorClass d2 = target - d1;
      const auto polarization = DivisorClass::polarization();
      if (intersect(d1, polarization, g) <= 0 || intersect(d2, polarization, g) <= 0) {
        return false;
      }
      if (lattice::riemann_roch_chi(d1, g) < 2 || lattice::riemann_roch_chi(d2, g) < 2) {
        return false;
      }
      if (canonical_less(d2, d1)) return false;
      pairs.emplace_back(d1, d2);
      return false;
    });
  }
  return pairs;
}

std::optional<DivisorClass> noether_lefschetz_condition_search(long long g, long long m,
                                                               NlCondition condition,
                                                               const SearchBounds& bounds) {
  bounds.validate();
  const auto profile = decompose_profile(g);
  require_twist_range(g, m, 0, profile.k, "Noether-Lefschetz search");

  const bool rational = condition == NlCondition::orthogonal_rational_curve;
  const long long degree = condition == NlCondition::elliptic_degree_one   ? 1
                           : condition == NlCondition::elliptic_degree_two ? 2
                                                                           : 0;
  const DivisorClass twisted = DivisorClass::twisted_polarization(m);

  for (long long a = 0; a <= bounds.a_max; ++a) {
    // a = 0: effective classes orthogonal to L are sums of R_i, so t_i ≥ 0.
    // a ≥ 1: nef pencils and irreducible curves other than R_i meet each R_i
    // non-negatively, so t_i ≤ 0.
    if (a == 0 && !rational) continue;
    auto window = a == 0 ? uniform_window(0, bounds.t_max) : uniform_window(-bounds.t_max, 0);
    window.norm_min = window.norm_max = 4 * a * a * (g - 1) + (rational ? 4 : 0);
    // D·L_m = a(2g−2) + mΣt/2.
    const long long fixed = a * (2 * g - 2);
    if (m == 0) {
      if (fixed != degree) continue;
    } else {
      const long long numerator = 2 * (degree - fixed);
      if (numerator % m != 0) continue;
      window.sum_min = window.sum_max = numerator / m;
    }

    std::optional<DivisorClass> found;
    detail::visit_window(window, [&](const DivisorClass::Doubled& t) {
      DivisorClass d(a, t);
      if (intersect(d, twisted, g) != degree) {
        throw Error(ErrorKind::internal_inconsistency, "window produced a wrong degree");
      }
      if (!rational && !lattice::is_primitive(d)) return false;
      found = d;
      return true;
    });
    if (found) return found;
  }
  return std::nullopt;
}

CliffordData clifford_max(long long genus) {
  if (genus < 0) throw Error(ErrorKind::invalid_argument, "genus must be >= 0");
  return CliffordData{genus, genus <= 2 ? 0 : (genus - 1) / 2};
}

EmbeddingData embedding_data(long long g, long long m) {
  const auto profile = decompose_profile(g);
  require_twist_range(g, m, 1, profile.k - 1, "embedding data");
  const long long gm = profile.twisted_genus(m);
  EmbeddingData data{gm, profile.twisted_genus(m + 1), 2 * (gm - 2 * m - 1)};
  const long long degree = intersect(DivisorClass::twisted_polarization(m),
                                     DivisorClass::twisted_polarization(m + 1), g);
  if (degree != data.curve_degree) {
    throw Error(ErrorKind::internal_inconsistency, "L_m . L_{m+1} != 2(g_m - 2m - 1)");
  }
  return data;
}

}  // namespace nikulin::positivity
