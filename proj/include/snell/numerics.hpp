#pragma once

#include <cmath>
#include <utility>

namespace snell {

// Bisect a sign change of f on [lo, hi]. f(lo) and f(hi) must straddle zero
// (either may be exactly zero). Runs until the interval has no representable
// midpoint or max_iter splits, whichever comes first; returns the midpoint of
// the final bracket.
template <class F>
double bisect(F&& f, double lo, double hi, int max_iter = 200) {
  double flo = f(lo);
  if (flo == 0.0) return lo;
  if (f(hi) == 0.0) return hi;
  for (int i = 0; i < max_iter; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    const double fmid = f(mid);
    if (fmid == 0.0) return mid;
    if (std::signbit(fmid) == std::signbit(flo)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// Minimize a unimodal f on [lo, hi] by ternary section until the bracket is
// narrower than xtol; returns the bracket midpoint.
template <class F>
double ternary_min(F&& f, double lo, double hi, double xtol, int max_iter = 500) {
  for (int i = 0; i < max_iter && hi - lo > xtol; ++i) {
    const double m1 = lo + (hi - lo) / 3.0;
    const double m2 = hi - (hi - lo) / 3.0;
    if (f(m1) < f(m2)) {
      hi = m2;
    } else {
      lo = m1;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace snell
