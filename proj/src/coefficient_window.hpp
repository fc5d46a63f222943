#pragma once

// Depth-first enumeration of doubled coefficient vectors t ∈ Z⁸ that share a
// parity, lie in a box, and satisfy two-sided bounds on Σt_i² and Σt_i.
// Vectors are produced in lexicographically descending order of t.

#include <algorithm>
#include <array>
#include <limits>
#include <type_traits>

#include "nikulin/lattice.hpp"

namespace nikulin::positivity::detail {

using lattice::DivisorClass;
using lattice::kRationalCurves;

struct CoefficientWindow {
  std::array<long long, kRationalCurves> lo{};
  std::array<long long, kRationalCurves> hi{};
  long long norm_min = 0;
  long long norm_max = std::numeric_limits<long long>::max() / 4;
  long long sum_min = std::numeric_limits<long long>::min() / 4;
  long long sum_max = std::numeric_limits<long long>::max() / 4;
};

template <class Visitor>
class WindowWalker {
 public:
  WindowWalker(const CoefficientWindow& window, Visitor& visit) : w_(window), visit_(visit) {
    for (int parity = 0; parity < 2; ++parity) build_suffix(parity);
  }

  /// Returns true if the visitor asked to stop.
  bool run() {
    for (long long v = w_.hi[0]; v >= w_.lo[0]; --v) {
      const int parity = static_cast<int>(v & 1);
      t_[0] = v;
      if (descend(1, parity, v * v, v)) return true;
    }
    return false;
  }

 private:
  struct Suffix {
    bool feasible = true;
    long long sq_min = 0, sq_max = 0, sum_min = 0, sum_max = 0;
  };

  void build_suffix(int parity) {
    auto& table = suffix_[parity];
    table[kRationalCurves] = Suffix{};
    for (std::size_t i = kRationalCurves; i-- > 0;) {
      Suffix next = table[i + 1];
      bool any = false;
      long long sq_lo = 0, sq_hi = 0, v_lo = 0, v_hi = 0;
      for (long long v = w_.lo[i]; v <= w_.hi[i]; ++v) {
        if ((v & 1) != parity) continue;
        if (!any) {
          sq_lo = sq_hi = v * v;
          v_lo = v_hi = v;
          any = true;
        } else {
          sq_lo = std::min(sq_lo, v * v);
          sq_hi = std::max(sq_hi, v * v);
          v_lo = std::min(v_lo, v);
          v_hi = std::max(v_hi, v);
        }
      }
      Suffix s;
      s.feasible = next.feasible && any;
      s.sq_min = next.sq_min + sq_lo;
      s.sq_max = next.sq_max + sq_hi;
      s.sum_min = next.sum_min + v_lo;
      s.sum_max = next.sum_max + v_hi;
      table[i] = s;
    }
  }

  bool admissible(std::size_t next, int parity, long long sq, long long sum) const {
    const Suffix& s = suffix_[parity][next];
    if (!s.feasible) return false;
    if (sq + s.sq_min > w_.norm_max || sq + s.sq_max < w_.norm_min) return false;
    if (sum + s.sum_min > w_.sum_max || sum + s.sum_max < w_.sum_min) return false;
    return true;
  }

  bool descend(std::size_t i, int parity, long long sq, long long sum) {
    if (!admissible(i, parity, sq, sum)) return false;
    if (i == kRationalCurves) return visit_(static_cast<const DivisorClass::Doubled&>(t_));
    for (long long v = w_.hi[i]; v >= w_.lo[i]; --v) {
      if ((v & 1) != parity) continue;
      t_[i] = v;
      if (descend(i + 1, parity, sq + v * v, sum + v)) return true;
    }
    return false;
  }

  const CoefficientWindow& w_;
  Visitor& visit_;
  std::array<std::array<Suffix, kRationalCurves + 1>, 2> suffix_{};
  DivisorClass::Doubled t_{};
};

/// Calls visit(t) for every admissible vector; stops early when visit returns true.
template <class Visitor>
bool visit_window(const CoefficientWindow& window, Visitor&& visit) {
  WindowWalker<std::remove_reference_t<Visitor>> walker(window, visit);
  return walker.run();
}

}  // namespace nikulin::positivity::detail
