#include "nikulin/detvar.hpp"

#include <string>

#include "nikulin/errors.hpp"

namespace nikulin::detvar {

namespace {

BigInt binomial(long long n, long long k) {
  BigInt b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return b;
}

long long choose2(long long n) { return n * (n - 1) / 2; }

void require_twisted_genus(long long gm) {
  if (gm < 2) {
    throw Error(ErrorKind::out_of_range, "twisted genus must be >= 2, got " + std::to_string(gm));
  }
}

// Rank gm + 2 exceeds the number of variables; its locus is the whole space
// (codimension C(0, 2) = 0), which keeps rank 4 meaningful at g_m = 2.
void require_rank(long long gm, long long rank) {
  if (rank < 1 || rank > gm + 2) {
    throw Error(ErrorKind::out_of_range, "quadric rank must be in 1.." + std::to_string(gm + 2) +
                                             ", got " + std::to_string(rank));
  }
}

}  // namespace

BigInt det_degree(long long r, long long e) {
  if (e < 1 || r < 0 || r > e) {
    throw Error(ErrorKind::out_of_range, "det_degree needs 0 <= r <= e and e >= 1, got r = " +
                                             std::to_string(r) + ", e = " + std::to_string(e));
  }
  BigInt numerator = 1;
  BigInt denominator = 1;
  for (long long i = 0; i < r; ++i) {
    numerator *= binomial(e + i, r - i);
    denominator *= binomial(2 * i + 1, i);
  }
  if (!mpz_divisible_p(numerator.get_mpz_t(), denominator.get_mpz_t())) {
    throw Error(ErrorKind::formula_violation, "A^" + std::to_string(r) + "_" + std::to_string(e) +
                                                  " is not an integer");
  }
  BigInt quotient;
  mpz_divexact(quotient.get_mpz_t(), numerator.get_mpz_t(), denominator.get_mpz_t());
  return quotient;
}

QuadricSpaceDims quadric_space_dims(long long twisted_genus) {
  require_twisted_genus(twisted_genus);
  QuadricSpaceDims dims;
  dims.sym2_dim = choose2(twisted_genus + 2);
  dims.codim_ideal = 4 * twisted_genus - 2;
  dims.ideal_dim = dims.sym2_dim - dims.codim_ideal;
  return dims;
}

long long rank_locus_codim(long long twisted_genus, long long rank) {
  require_rank(twisted_genus, rank);
  return choose2(twisted_genus + 2 - rank);
}

long long expected_rank_ideal_dim(long long twisted_genus, long long rank) {
  require_twisted_genus(twisted_genus);
  require_rank(twisted_genus, rank);
  const long long correction = 4 + 3 * rank - rank * rank;
  if (correction % 2 != 0) {
    throw Error(ErrorKind::formula_violation, "(4 + 3k - k^2) is odd");
  }
  const long long closed = (rank - 4) * twisted_genus + correction / 2;
  const auto dims = quadric_space_dims(twisted_genus);
  const long long assembled =
      dims.sym2_dim - (dims.codim_ideal + rank_locus_codim(twisted_genus, rank));
  if (closed != assembled) {
    throw Error(ErrorKind::formula_violation, "closed-form dimension disagrees with the count");
  }
  return closed;
}

}  // namespace nikulin::detvar
