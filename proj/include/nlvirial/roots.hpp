#pragma once

#include <cmath>
#include <string>

#include "nlvirial/errors.hpp"

namespace nlvirial::roots {

/// Bisection for a sign change of f on [lo, hi]; stops once the bracket is
/// narrower than x_tol.
template <class F>
double bisect(F&& f, double lo, double hi, double x_tol = 1e-12, int max_iter = 200) {
  double flo = f(lo);
  const double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo < 0.0) == (fhi < 0.0))
    throw no_solution_error("bisect: no sign change on [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  for (int i = 0; i < max_iter && hi - lo > x_tol; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double fmid = f(mid);
    if (fmid == 0.0) return mid;
    if ((fmid < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

struct Extremum {
  double x;
  double value;
};

/// Golden-section search for the maximum of a unimodal f on [lo, hi].
/// Terminates when the two interior values differ by less than f_tol and the
/// bracket is below x_tol, or after max_iter contractions.
template <class F>
Extremum golden_section_maximize(F&& f, double lo, double hi, double f_tol = 1e-12, double x_tol = 1e-7,
                                 int max_iter = 500) {
  const double r = 0.5 * (std::sqrt(5.0) - 1.0);
  double x1 = hi - r * (hi - lo);
  double x2 = lo + r * (hi - lo);
  double f1 = f(x1);
  double f2 = f(x2);
  for (int i = 0; i < max_iter; ++i) {
    if (std::abs(f1 - f2) < f_tol && hi - lo < x_tol) break;
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + r * (hi - lo);
      f2 = f(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - r * (hi - lo);
      f1 = f(x1);
    }
  }
  return f1 > f2 ? Extremum{x1, f1} : Extremum{x2, f2};
}

/// Five-point central difference, O(h^4).
template <class F>
double central_derivative(F&& f, double x, double h) {
  return (f(x - 2.0 * h) - 8.0 * f(x - h) + 8.0 * f(x + h) - f(x + 2.0 * h)) / (12.0 * h);
}

/// Polishes a located maximum by bisecting on the sign of the numerical
/// derivative inside [x - radius, x + radius].  Value comparisons alone cannot
/// resolve the abscissa of a flat maximum much below sqrt(epsilon).
template <class F>
double polish_stationary_point(F&& f, double x, double radius, double h, double x_tol = 1e-13) {
  auto slope = [&](double s) { return central_derivative(f, s, h); };
  double lo = x - radius;
  double hi = x + radius;
  if (slope(lo) <= 0.0 || slope(hi) >= 0.0) return x;
  return bisect(slope, lo, hi, x_tol);
}

}  // namespace nlvirial::roots
