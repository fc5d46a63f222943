#pragma once

// Degrees of symmetric determinantal loci and the dimension count for
// quadrics of bounded rank containing a K3 surface in P^{g_m}.

#include "nikulin/rational.hpp"

namespace nikulin::detvar {

/// Degree A^r_e of the locus of symmetric e×e matrices of corank ≥ r,
///
///   A^r_e = Π_{i<r} C(e+i, r−i) / Π_{i<r} C(2i+1, i).
///
/// Requires 0 ≤ r ≤ e and e ≥ 1 (Error(out_of_range) otherwise). The full
/// numerator and denominator are formed first and divided once; a nonzero
/// remainder raises Error(formula_violation).
BigInt det_degree(long long r, long long e);

struct QuadricSpaceDims {
  long long sym2_dim = 0;     // dim S² H⁰(L_m) = C(g_m+2, 2)
  long long ideal_dim = 0;    // dim I_m(2)
  long long codim_ideal = 0;  // h⁰(L_m^{⊗2}) = 4g_m − 2

  friend bool operator==(const QuadricSpaceDims&, const QuadricSpaceDims&) = default;
};

/// Requires g_m ≥ 2.
QuadricSpaceDims quadric_space_dims(long long twisted_genus);

/// Codimension C(g_m+2−rank, 2) of the quadrics of rank ≤ rank; 1 ≤ rank ≤ g_m+2,
/// where rank ≥ g_m+1 gives the whole space.
long long rank_locus_codim(long long twisted_genus, long long rank);

/// Expected dim of {q ∈ I_m(2) : rk q ≤ rank}: (rank−4)g_m + (4 + 3·rank − rank²)/2,
/// checked against C(g_m+2, 2) − (4g_m − 2) − C(g_m+2−rank, 2).
long long expected_rank_ideal_dim(long long twisted_genus, long long rank);

}  // namespace nikulin::detvar
