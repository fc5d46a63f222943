// One line per acceptance criterion; exit status is nonzero if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "nikulin/chow.hpp"
#include "nikulin/detvar.hpp"
#include "nikulin/errors.hpp"
#include "nikulin/lattice.hpp"
#include "nikulin/positivity.hpp"
#include "oracles.hpp"

using namespace nikulin;
using lattice::DivisorClass;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  long long cases = 0;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

struct Criterion {
  int id;
  std::string name;
  double budget_seconds;
  std::function<void(Outcome&)> body;
};

std::string at(long long g, long long m) {
  return "g = " + std::to_string(g) + ", m = " + std::to_string(m);
}

void grr_replay(Outcome& out) {
  for (long long g = 3; g <= 60; ++g) {
    const auto prof = lattice::decompose_profile(g);
    for (long long m = 0; m <= prof.k; ++m) {
      if (m == prof.k && prof.p < 2) continue;
      for (long long n = 1; n <= 4; ++n) {
        ++out.cases;
        const auto engine = chow::c1_pushforward_bundle(n, m, g);
        if (!(engine == chow::grr_closed_form(n, m, g))) {
          out.fail("mismatch at n = " + std::to_string(n) + ", " + at(g, m));
        }
      }
    }
  }
}

void twist_invariance(Outcome& out) {
  for (long long g = 3; g <= 100; ++g) {
    ++out.cases;
    const auto images = chow::twist_kappas(make_rational(1), make_rational(1), g);
    for (int i = 0; i < 4; ++i) {
      const auto twisted = chow::substitute_kappas(chow::gamma_class(i, g), images);
      if (twisted[chow::Symbol::alpha] != 0 || twisted[chow::Symbol::beta] != 0) {
        out.fail("gamma_" + std::to_string(i) + " picks up a twist term at g = " + std::to_string(g));
      }
    }
    if (!chow::gamma_invariance_check(g)) out.fail("invariance check false at g = " + std::to_string(g));
    bool moved = false;
    for (auto s : chow::kKappaSymbols) {
      const auto& image = images.at(s);
      moved = moved || image[chow::Symbol::alpha] != 0 || image[chow::Symbol::beta] != 0;
    }
    if (!moved) out.fail("no kappa changes under the twist at g = " + std::to_string(g));
  }
}

void divisor_class_end_to_end(Outcome& out) {
  for (long long g = 3; g <= 60; ++g) {
    const auto prof = lattice::decompose_profile(g);
    for (long long m = 0; m <= prof.k; ++m) {
      if (!chow::divisor_class_admissible(g, m)) continue;
      ++out.cases;
      const auto r = chow::divisor_class(g, m);
      const long long gm = g - 2 * m * m;
      const auto& c = r.normalized;
      const bool match = c.residual.is_zero() && c.gamma[0] == make_rational(2, gm + 1) &&
                         c.gamma[1] == make_rational(-6 * m, gm + 1) &&
                         c.gamma[2] == make_rational(m * m, gm + 1) &&
                         c.gamma[3] == make_rational(-m * m * m, gm + 1) &&
                         c.hodge == make_rational(2 * gm - 1);
      if (!match) out.fail("coefficients differ at " + at(g, m));
    }
  }
}

std::string decimal(const oracle::BigInt& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

void determinantal_degrees(Outcome& out) {
  const oracle::Pascal binom(120);
  for (long long e = 1; e <= 40; ++e) {
    ++out.cases;
    if (detvar::det_degree(1, e) != static_cast<long>(e)) out.fail("A^1_e != e at e = " + std::to_string(e));
    if (detvar::det_degree(0, e) != 1) out.fail("A^0_e != 1 at e = " + std::to_string(e));
    for (long long r = 0; r <= e; ++r) {
      ++out.cases;
      const auto ref = oracle::det_degree(binom, static_cast<std::size_t>(r), static_cast<std::size_t>(e));
      if (!ref.integral) out.fail("oracle reports a non-integral value at r = " + std::to_string(r));
      if (detvar::det_degree(r, e).get_str() != decimal(ref.value)) {
        out.fail("disagrees with the oracle at r = " + std::to_string(r) + ", e = " + std::to_string(e));
      }
    }
  }
  if (detvar::det_degree(2, 3) != 4) out.fail("A^2_3 != 4");
  if (detvar::det_degree(3, 7) != 294 || decimal(oracle::det_degree(binom, 3, 7).value) != "294") {
    out.fail("A^3_7 != 294");
  }
}

void dimension_bookkeeping(Outcome& out) {
  auto choose2 = [](long long n) { return n * (n - 1) / 2; };
  for (long long gm = 2; gm <= 100; ++gm) {
    ++out.cases;
    if (detvar::expected_rank_ideal_dim(gm, 4) != 0) {
      out.fail("rank-4 expected dimension nonzero at g_m = " + std::to_string(gm));
    }
    for (long long k = 1; k <= gm + 1; ++k) {
      ++out.cases;
      const long long assembled = choose2(gm + 2) - (4 * gm - 2) - choose2(gm + 2 - k);
      if (detvar::expected_rank_ideal_dim(gm, k) != assembled) {
        out.fail("closed form differs at g_m = " + std::to_string(gm) + ", k = " + std::to_string(k));
      }
    }
  }
}

void positivity_corroboration(Outcome& out) {
  const positivity::SearchBounds bounds{2, 10};
  for (long long g = 8; g <= 60; ++g) {
    const auto prof = lattice::decompose_profile(g);
    for (long long m = 1; m <= prof.k - 1; ++m) {
      ++out.cases;
      if (auto w = positivity::rational_obstruction_search(g, m, bounds)) {
        out.fail("obstruction found at " + at(g, m));
      }
      const auto pairs =
          positivity::movable_decomposition_search(g, DivisorClass::twisted_polarization(m), bounds);
      if (!pairs.empty()) out.fail("movable decomposition found at " + at(g, m));
    }
    if (prof.p == 0) {
      ++out.cases;
      const auto v = positivity::very_ample_check(g, prof.k);
      const auto lk = DivisorClass::twisted_polarization(prof.k);
      if (v.status != positivity::Status::obstructed || !v.witness || *v.witness != lk ||
          v.rationale != "fixed-rational-curve" || oracle::intersect(lk, lk, g) != -2) {
        out.fail("fixed-curve branch does not report L_k at g = " + std::to_string(g));
      }
    }
  }
}

void threshold_consistency(Outcome& out) {
  for (long long g = 4; g <= 500; ++g) {
    const auto prof = lattice::decompose_profile(g);
    const Rational threshold = make_rational(2 * g * g - 8 * g + 7, 2 * g - 2);
    for (long long m = 1; m <= prof.k; ++m) {
      ++out.cases;
      const long long t = 2 * m * m;
      if ((make_rational(t) < threshold) != positivity::square_free_threshold_holds(g, t)) {
        out.fail("forms disagree at " + at(g, m));
      }
      if (positivity::very_ample_threshold(g) != threshold) out.fail("threshold value at g = " + std::to_string(g));
    }
  }
}

void embedding_table(Outcome& out) {
  for (long long g = 8; g <= 200; ++g) {
    const auto prof = lattice::decompose_profile(g);
    for (long long m = 1; m <= prof.k - 1; ++m) {
      ++out.cases;
      const long long gm = g - 2 * m * m;
      const auto lm = DivisorClass::twisted_polarization(m);
      const auto next = DivisorClass::twisted_polarization(m + 1);
      if (lattice::intersect(lm, next, g) != 2 * (gm - 2 * m - 1) ||
          oracle::intersect(lm, next, g) != 2 * (gm - 2 * m - 1)) {
        out.fail("L_m . L_{m+1} wrong at " + at(g, m));
      }
    }
  }
  // D ∈ |L_k| under L_{k−1}: genus p, linearly normal and non-special, so
  // degree = ambient dimension + genus.
  for (long long k = 2; k <= 20; ++k) {
    for (long long p = 0; p <= 2; ++p) {
      ++out.cases;
      const auto d = positivity::embedding_data(2 * k * k + p, k - 1);
      if (d.ambient_dim != 4 * k - 2 + p || d.curve_genus != p || d.curve_degree != d.ambient_dim + p) {
        out.fail("special case wrong at k = " + std::to_string(k) + ", p = " + std::to_string(p));
      }
    }
  }
  const auto d8 = positivity::embedding_data(8, 1);
  ++out.cases;
  if (d8.ambient_dim != 6 || d8.curve_genus != 0 || d8.curve_degree != 6) {
    out.fail("g = 8 is not a degree-6 rational normal curve in P^6");
  }
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "GRR replay", 10.0, grr_replay},
      {2, "twist invariance", 1.0, twist_invariance},
      {3, "rank-4 divisor class end to end", 10.0, divisor_class_end_to_end},
      {4, "determinantal degrees", 1.0, determinantal_degrees},
      {5, "dimension bookkeeping", 1.0, dimension_bookkeeping},
      {6, "positivity corroboration at (2,10)", 120.0, positivity_corroboration},
      {7, "threshold consistency", 5.0, threshold_consistency},
      {8, "embedding-data table", 1.0, embedding_table},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(out);
    } catch (const std::exception& e) {
      out.fail(std::string("exception: ") + e.what());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (out.ok && seconds > c.budget_seconds) {
      out.fail("took longer than the " + std::to_string(c.budget_seconds) + " s budget");
    }
    if (!out.ok) ++failures;
    std::printf("criterion %d %-40s %s  cases=%lld  %.3fs%s%s\n", c.id, c.name.c_str(),
                out.ok ? "PASS" : "FAIL", out.cases, seconds, out.ok ? "" : "  ",
                out.detail.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
