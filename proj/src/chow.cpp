#include "nikulin/chow.hpp"

#include <string>

#include "nikulin/detvar.hpp"
#include "nikulin/errors.hpp"
#include "nikulin/lattice.hpp"

namespace nikulin::chow {

namespace {

constexpr std::size_t index_of(Generator gen) { return static_cast<std::size_t>(gen); }

struct KappaIndex {
  int ell, eps, t2;
};

constexpr KappaIndex kappa_index(Symbol s) {
  switch (s) {
    case Symbol::k300: return {3, 0, 0};
    case Symbol::k210: return {2, 1, 0};
    case Symbol::k120: return {1, 2, 0};
    case Symbol::k030: return {0, 3, 0};
    case Symbol::k101: return {1, 0, 1};
    case Symbol::k011: return {0, 1, 1};
    default: return {-1, -1, -1};
  }
}

bool is_kappa(Symbol s) { return kappa_index(s).ell >= 0; }

Symbol kappa_symbol(int ell, int eps, int t2) {
  for (Symbol s : kKappaSymbols) {
    const auto idx = kappa_index(s);
    if (idx.ell == ell && idx.eps == eps && idx.t2 == t2) return s;
  }
  throw Error(ErrorKind::internal_inconsistency, "no codimension-1 kappa symbol for index");
}

Symbol base_symbol(Generator gen) {
  switch (gen) {
    case Generator::hodge: return Symbol::hodge;
    case Generator::alpha: return Symbol::alpha;
    case Generator::beta: return Symbol::beta;
    default:
      throw Error(ErrorKind::invalid_argument, "not a base generator");
  }
}

// κ_{a,b,c} in codimension 0, computed on a fiber.
Rational codim_zero_kappa(int ell, int eps, int t2, long long g) {
  if (ell == 2 && eps == 0 && t2 == 0) return make_rational(2 * g - 2);
  if (ell == 0 && eps == 2 && t2 == 0) return make_rational(-4);
  if (ell == 1 && eps == 1 && t2 == 0) return make_rational(0);
  if (ell == 0 && eps == 0 && t2 == 1) return make_rational(24);
  throw Error(ErrorKind::internal_inconsistency, "not a codimension-0 kappa index");
}

void require_genus(long long g) {
  if (g < 2) throw Error(ErrorKind::invalid_genus, "genus must be >= 2, got " + std::to_string(g));
}

}  // namespace

Monomial Monomial::of(Generator gen, std::uint8_t power) {
  Monomial m;
  m.exponents[index_of(gen)] = power;
  return m;
}

int Monomial::degree() const noexcept {
  int d = 0;
  for (std::size_t i = 0; i < kGenerators; ++i) {
    d += exponents[i] * (i == index_of(Generator::t2) ? 2 : 1);
  }
  return d;
}

int Monomial::base_degree() const noexcept {
  return exponents[index_of(Generator::hodge)] + exponents[index_of(Generator::alpha)] +
         exponents[index_of(Generator::beta)];
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r;
  for (std::size_t i = 0; i < kGenerators; ++i) {
    r.exponents[i] = static_cast<std::uint8_t>(exponents[i] + other.exponents[i]);
  }
  return r;
}

FiberPoly::FiberPoly(const Rational& constant) { add_term(Monomial{}, constant); }

FiberPoly FiberPoly::generator(Generator gen) { return monomial(Monomial::of(gen)); }

FiberPoly FiberPoly::monomial(const Monomial& mono, const Rational& coefficient) {
  FiberPoly p;
  p.add_term(mono, coefficient);
  return p;
}

void FiberPoly::add_term(const Monomial& mono, const Rational& coefficient) {
  if (mono.degree() > kMaxDegree || coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(mono, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational FiberPoly::coefficient(const Monomial& mono) const {
  auto it = terms_.find(mono);
  return it == terms_.end() ? Rational(0) : it->second;
}

FiberPoly FiberPoly::homogeneous_part(int degree) const {
  FiberPoly p;
  for (const auto& [mono, c] : terms_)
    if (mono.degree() == degree) p.terms_.emplace(mono, c);
  return p;
}

FiberPoly& FiberPoly::operator+=(const FiberPoly& other) {
  for (const auto& [mono, c] : other.terms_) add_term(mono, c);
  return *this;
}

FiberPoly& FiberPoly::operator-=(const FiberPoly& other) {
  for (const auto& [mono, c] : other.terms_) add_term(mono, -c);
  return *this;
}

FiberPoly& FiberPoly::operator*=(const FiberPoly& other) {
  FiberPoly product;
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : other.terms_) product.add_term(m1 * m2, c1 * c2);
  *this = std::move(product);
  return *this;
}

FiberPoly& FiberPoly::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [mono, c] : terms_) c *= scalar;
  return *this;
}

FiberPoly pow(const FiberPoly& x, unsigned n) {
  FiberPoly r(make_rational(1));
  for (unsigned i = 0; i < n; ++i) r *= x;
  return r;
}

std::string_view to_string(Symbol symbol) noexcept {
  switch (symbol) {
    case Symbol::k300: return "kappa_3_0_0";
    case Symbol::k210: return "kappa_2_1_0";
    case Symbol::k120: return "kappa_1_2_0";
    case Symbol::k030: return "kappa_0_3_0";
    case Symbol::k101: return "kappa_1_0_1";
    case Symbol::k011: return "kappa_0_1_1";
    case Symbol::hodge: return "lambda";
    case Symbol::alpha: return "alpha";
    case Symbol::beta: return "beta";
  }
  return "?";
}

BaseClass BaseClass::of(Symbol symbol, const Rational& coefficient) {
  BaseClass x;
  x[symbol] = coefficient;
  return x;
}

BaseClass BaseClass::scalar(const Rational& value) {
  BaseClass x;
  x.scalar_ = value;
  return x;
}

bool BaseClass::is_zero() const { return support_size() == 0; }

std::size_t BaseClass::support_size() const {
  std::size_t n = scalar_ != 0 ? 1 : 0;
  for (const auto& c : coefficients_)
    if (c != 0) ++n;
  return n;
}

BaseClass BaseClass::times(Generator base_generator) const {
  BaseClass r;
  r[base_symbol(base_generator)] = scalar_;
  r.truncated_ = truncated_;
  for (const auto& c : coefficients_) {
    if (c != 0) r.truncated_ = true;
  }
  return r;
}

BaseClass& BaseClass::operator+=(const BaseClass& other) {
  scalar_ += other.scalar_;
  for (std::size_t i = 0; i < kSymbols; ++i) coefficients_[i] += other.coefficients_[i];
  truncated_ = truncated_ || other.truncated_;
  return *this;
}

BaseClass& BaseClass::operator-=(const BaseClass& other) {
  scalar_ -= other.scalar_;
  for (std::size_t i = 0; i < kSymbols; ++i) coefficients_[i] -= other.coefficients_[i];
  truncated_ = truncated_ || other.truncated_;
  return *this;
}

BaseClass& BaseClass::operator*=(const Rational& scalar) {
  scalar_ *= scalar;
  for (auto& c : coefficients_) c *= scalar;
  return *this;
}

BaseClass pushforward(const FiberPoly& poly, long long g) {
  require_genus(g);
  BaseClass result;
  for (const auto& [mono, coefficient] : poly.terms()) {
    const int ell = mono[Generator::ell];
    const int eps = mono[Generator::eps];
    const int t2 = mono[Generator::t2];
    const int codim = ell + eps + 2 * t2 - 2;
    const int base = mono.base_degree();
    if (codim < 0) continue;
    if (codim == 0) {
      const Rational value = coefficient * codim_zero_kappa(ell, eps, t2, g);
      if (value == 0) continue;
      if (base == 0) {
        result.scalar_part() += value;
      } else if (base == 1) {
        for (Generator gen : {Generator::hodge, Generator::alpha, Generator::beta}) {
          if (mono[gen] == 1) result[base_symbol(gen)] += value;
        }
      } else {
        result.mark_truncated();
      }
    } else if (codim == 1 && base == 0) {
      result[kappa_symbol(ell, eps, t2)] += coefficient;
    } else {
      result.mark_truncated();
    }
  }
  return result;
}

FiberPoly chern_character(const Rational& x, const Rational& y, long long n) {
  if (n < 1) throw Error(ErrorKind::invalid_argument, "chern_character needs n >= 1");
  const FiberPoly c =
      make_rational(n) * (x * FiberPoly::generator(Generator::ell) + y * FiberPoly::generator(Generator::eps));
  const FiberPoly c2 = c * c;
  return FiberPoly(make_rational(1)) + c + make_rational(1, 2) * c2 + make_rational(1, 6) * (c2 * c);
}

FiberPoly todd_relative() {
  const FiberPoly c1 = make_rational(-1) * FiberPoly::generator(Generator::hodge);
  const FiberPoly c2 = FiberPoly::generator(Generator::t2);
  return FiberPoly(make_rational(1)) + make_rational(1, 2) * c1 + make_rational(1, 12) * (c1 * c1 + c2) +
         make_rational(1, 24) * (c1 * c2);
}

long long bundle_rank(long long n, long long m, long long g) {
  const auto profile = lattice::decompose_profile(g);
  const long long formula = n * n * (profile.twisted_genus(m) - 1) + 2;
  const long long chi =
      lattice::riemann_roch_chi(n * lattice::DivisorClass::twisted_polarization(m), g);
  if (chi != formula) {
    throw Error(ErrorKind::internal_inconsistency, "rank formula disagrees with Riemann-Roch");
  }
  return formula;
}

BaseClass grr_closed_form(long long n, long long m, long long g) {
  const Rational n3 = make_rational(n * n * n, 6);
  const Rational n1 = make_rational(n, 12);
  const long long gm = g - 2 * m * m;
  BaseClass x;
  x[Symbol::k300] = n3;
  x[Symbol::k210] = n3 * make_rational(-3 * m);
  x[Symbol::k120] = n3 * make_rational(3 * m * m);
  x[Symbol::k030] = n3 * make_rational(-m * m * m);
  x[Symbol::k101] = n1;
  x[Symbol::k011] = n1 * make_rational(-m);
  x[Symbol::hodge] = -(make_rational(1) + make_rational(n * n, 2) * make_rational(gm - 1));
  for (Symbol s : kKappaSymbols) x[s].canonicalize();
  x[Symbol::hodge].canonicalize();
  return x;
}

BaseClass c1_pushforward_bundle(long long n, long long m, long long g) {
  const auto profile = lattice::decompose_profile(g);
  if (n < 1) throw Error(ErrorKind::out_of_range, "GRR needs n >= 1");
  if (m < 0 || m > profile.k || (m == profile.k && profile.p < 2)) {
    throw Error(ErrorKind::out_of_range,
                "GRR needs 0 <= m <= k with p >= 2 when m = k (g = " + std::to_string(g) +
                    ", m = " + std::to_string(m) + ")");
  }
  const FiberPoly integrand = chern_character(make_rational(1), make_rational(-m), n) * todd_relative();
  const BaseClass engine = pushforward(integrand.homogeneous_part(3), g);
  const BaseClass closed = grr_closed_form(n, m, g);
  if (!(engine == closed)) {
    std::string diff;
    if (engine.scalar_part() != closed.scalar_part()) diff += " scalar";
    for (std::size_t i = 0; i < kSymbols; ++i) {
      const auto s = static_cast<Symbol>(i);
      if (engine[s] != closed[s]) {
        diff += " " + std::string(to_string(s)) + ": engine " + nikulin::to_string(engine[s]) +
                " vs closed form " + nikulin::to_string(closed[s]) + ";";
      }
    }
    throw Error(ErrorKind::derivation_failure, "GRR mismatch at n = " + std::to_string(n) +
                                                   ", m = " + std::to_string(m) +
                                                   ", g = " + std::to_string(g) + ":" + diff);
  }
  return engine;
}

std::map<Symbol, BaseClass> twist_kappas(const Rational& alpha_weight,
                                         const Rational& beta_weight, long long g) {
  const FiberPoly ell = FiberPoly::generator(Generator::ell) +
                        alpha_weight * FiberPoly::generator(Generator::alpha);
  const FiberPoly eps = FiberPoly::generator(Generator::eps) +
                        beta_weight * FiberPoly::generator(Generator::beta);
  const FiberPoly t2 = FiberPoly::generator(Generator::t2);
  std::map<Symbol, BaseClass> images;
  for (Symbol s : kKappaSymbols) {
    const auto idx = kappa_index(s);
    images.emplace(s, pushforward(pow(ell, idx.ell) * pow(eps, idx.eps) * pow(t2, idx.t2), g));
  }
  return images;
}

BaseClass substitute_kappas(const BaseClass& x, const std::map<Symbol, BaseClass>& images) {
  BaseClass r;
  r.scalar_part() = x.scalar_part();
  for (std::size_t i = 0; i < kSymbols; ++i) {
    const auto s = static_cast<Symbol>(i);
    if (x[s] == 0) continue;
    auto it = images.find(s);
    if (is_kappa(s) && it != images.end()) {
      r += x[s] * it->second;
    } else {
      r[s] += x[s];
    }
  }
  if (x.truncated()) r.mark_truncated();
  return r;
}

BaseClass gamma_class(int index, long long g) {
  BaseClass x;
  switch (index) {
    case 0:
      x[Symbol::k300] = 1;
      x[Symbol::k101] = make_rational(-(g - 1), 4);
      break;
    case 1:
      x[Symbol::k210] = 1;
      x[Symbol::k011] = make_rational(-(g - 1), 12);
      break;
    case 2:
      x[Symbol::k101] = 1;
      x[Symbol::k120] = 6;
      break;
    case 3:
      x[Symbol::k011] = 1;
      x[Symbol::k030] = 2;
      break;
    default:
      throw Error(ErrorKind::invalid_argument, "gamma index must be 0..3");
  }
  x[Symbol::k101].canonicalize();
  x[Symbol::k011].canonicalize();
  return x;
}

bool gamma_invariance_check(long long g) {
  const auto images = twist_kappas(make_rational(1), make_rational(1), g);
  for (int i = 0; i < 4; ++i) {
    const BaseClass twisted = substitute_kappas(gamma_class(i, g), images);
    if (twisted[Symbol::alpha] != 0 || twisted[Symbol::beta] != 0) return false;
    if (!(twisted == gamma_class(i, g))) return false;
  }
  return true;
}

BaseClass GammaCoefficients::reconstruct(long long g) const {
  BaseClass x = residual;
  for (int i = 0; i < 4; ++i) x += gamma[i] * gamma_class(i, g);
  x[Symbol::hodge] += hodge;
  return x;
}

GammaCoefficients gamma_basis_reduce(const BaseClass& x, long long g) {
  // Each γ_i has a pivot κ that no other γ_j involves.
  GammaCoefficients out;
  out.gamma[0] = x[Symbol::k300];
  out.gamma[1] = x[Symbol::k210];
  out.gamma[2] = x[Symbol::k120] / make_rational(6);
  out.gamma[3] = x[Symbol::k030] / make_rational(2);
  out.hodge = x[Symbol::hodge];
  BaseClass span;
  for (int i = 0; i < 4; ++i) span += out.gamma[i] * gamma_class(i, g);
  span[Symbol::hodge] += out.hodge;
  out.residual = x - span;
  return out;
}

std::array<Rational, 5> DivisorClassResult::scaled() const {
  const Rational a(scale);
  return {a * normalized.gamma[0], a * normalized.gamma[1], a * normalized.gamma[2],
          a * normalized.gamma[3], a * normalized.hodge};
}

bool divisor_class_admissible(long long g, long long m) {
  if (g < 2) return false;
  const auto profile = lattice::decompose_profile(g);
  if (m < 0 || m > profile.k) return false;
  if (m == profile.k && profile.p < 3) return false;
  return profile.twisted_genus(m) >= 3;
}

DivisorClassResult divisor_class(long long g, long long m) {
  const auto profile = lattice::decompose_profile(g);
  if (!divisor_class_admissible(g, m)) {
    throw Error(ErrorKind::out_of_range,
                "class of the rank-4 quadric locus needs 0 <= m <= k-1, or m = k with p >= 3 "
                "(g = " + std::to_string(g) + ", k = " + std::to_string(profile.k) +
                    ", p = " + std::to_string(profile.p) + ", m = " + std::to_string(m) + ")");
  }
  DivisorClassResult result;
  result.g = g;
  result.m = m;
  result.twisted_genus = profile.twisted_genus(m);
  const long long gm = result.twisted_genus;

  const Rational ratio = make_rational(bundle_rank(2, m, g), bundle_rank(1, m, g));
  result.kappa_form =
      c1_pushforward_bundle(2, m, g) - make_rational(2) * ratio * c1_pushforward_bundle(1, m, g);
  result.normalized = gamma_basis_reduce(result.kappa_form, g);

  if (!result.normalized.residual.is_zero()) {
    throw Error(ErrorKind::theorem_check_failure, "class is not in the gamma/lambda span");
  }
  const Rational denom = make_rational(gm + 1);
  const std::array<Rational, 4> expected{make_rational(2) / denom, make_rational(-6 * m) / denom,
                                         make_rational(m * m) / denom, make_rational(-m * m * m) / denom};
  for (int i = 0; i < 4; ++i) {
    if (result.normalized.gamma[i] != expected[i]) {
      throw Error(ErrorKind::theorem_check_failure,
                  "gamma_" + std::to_string(i) + " coefficient " +
                      nikulin::to_string(result.normalized.gamma[i]) + " != " + nikulin::to_string(expected[i]));
    }
  }
  if (result.normalized.hodge != make_rational(2 * gm - 1)) {
    throw Error(ErrorKind::theorem_check_failure, "lambda coefficient != 2 g_m - 1");
  }
  result.scale = detvar::det_degree(gm - 3, gm + 1);
  return result;
}

}  // namespace nikulin::chow
