#pragma once

// Series kernels for the handful of special functions the closed forms need.
// Everything is summed from ascending series (or a continued fraction for the
// erf tail) so the values can be audited term by term.

#include <cmath>
#include <numbers>

#include "nlvirial/errors.hpp"

namespace nlvirial::specfun {

struct SeriesControl {
  int max_terms = 1000;
  double rel_tol = 1e-17;

  constexpr void validate() const {
    if (max_terms < 1) throw precondition_error("SeriesControl: max_terms must be >= 1");
    if (!(rel_tol > 0.0 && rel_tol < 1.0))
      throw precondition_error("SeriesControl: rel_tol must lie in (0, 1)");
  }
};

/// Largest argument accepted by bessel_i1 / struve_l1 before the partial
/// sums overflow a double.
inline constexpr double kMaxBesselArgument = 700.0;

/// First-kind Chebyshev polynomial by the three-term recurrence.
constexpr double chebyshev_t(int n, double z) {
  if (n < 0) throw precondition_error("chebyshev_t: order must be nonnegative");
  if (n == 0) return 1.0;
  double prev = 1.0;
  double cur = z;
  for (int k = 1; k < n; ++k) {
    const double next = 2.0 * z * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

namespace detail {

// |x| at or below this uses the Maclaurin series; above it the continued
// fraction for erfc converges in a few dozen terms.
inline constexpr double kErfSeriesLimit = 3.0;

inline double erf_maclaurin(double x, const SeriesControl& ctl) {
  // erf(x) = 2/sqrt(pi) exp(-x^2) sum 2^n x^(2n+1) / (1*3*...*(2n+1)),
  // all terms positive so nothing cancels near the switchover
  const double x2 = x * x;
  double term = x;
  double sum = x;
  for (int n = 1; n < ctl.max_terms; ++n) {
    term *= 2.0 * x2 / (2 * n + 1);
    sum += term;
    if (term <= ctl.rel_tol * sum) break;
  }
  return 2.0 * std::numbers::inv_sqrtpi * std::exp(-x2) * sum;
}

// erfc(x) for x > 0 via the Laplace continued fraction
//   erfc(x) = exp(-x^2)/sqrt(pi) * 1/(x + (1/2)/(x + 1/(x + (3/2)/(x + ...))))
// evaluated with the modified Lentz algorithm.
inline double erfc_continued_fraction(double x, const SeriesControl& ctl) {
  constexpr double tiny = 1e-300;
  double f = x;
  double c = x;
  double d = 0.0;
  for (int k = 1; k < ctl.max_terms; ++k) {
    const double a = 0.5 * k;
    d = x + a * d;
    if (std::abs(d) < tiny) d = tiny;
    c = x + a / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = c * d;
    f *= delta;
    if (std::abs(delta - 1.0) <= ctl.rel_tol) break;
  }
  return std::exp(-x * x) * std::numbers::inv_sqrtpi / f;
}

}  // namespace detail

inline double erf(double x, const SeriesControl& ctl = {}) {
  ctl.validate();
  if (std::isnan(x)) return x;
  const double ax = std::abs(x);
  double value;
  if (ax <= detail::kErfSeriesLimit) {
    value = detail::erf_maclaurin(ax, ctl);
  } else if (ax > 27.0) {
    value = 1.0;  // erfc underflows
  } else {
    value = 1.0 - detail::erfc_continued_fraction(ax, ctl);
  }
  return x < 0.0 ? -value : value;
}

/// Modified Bessel function I_1 from I_1(z) = sum (z/2)^(2k+1) / (k! (k+1)!).
inline double bessel_i1(double z, const SeriesControl& ctl = {}) {
  ctl.validate();
  if (!(z >= 0.0)) throw precondition_error("bessel_i1: argument must be >= 0");
  if (z > kMaxBesselArgument) throw std::overflow_error("bessel_i1: argument beyond series range");
  const double half = 0.5 * z;
  const double q = half * half;
  double term = half;
  double sum = term;
  for (int k = 1; k < ctl.max_terms; ++k) {
    term *= q / (static_cast<double>(k) * (k + 1));
    sum += term;
    if (term <= ctl.rel_tol * sum) break;
  }
  return sum;
}

/// Modified Struve function L_1 from
///   L_1(z) = sum (z/2)^(2k+2) / (Gamma(k+3/2) Gamma(k+5/2)).
/// The half-integer gammas follow from Gamma(1/2) = sqrt(pi) by recurrence,
/// which folds into a term ratio of (z/2)^2 / ((k+3/2)(k+5/2)).
inline double struve_l1(double z, const SeriesControl& ctl = {}) {
  ctl.validate();
  if (!(z >= 0.0)) throw precondition_error("struve_l1: argument must be >= 0");
  if (z > kMaxBesselArgument) throw std::overflow_error("struve_l1: argument beyond series range");
  const double half = 0.5 * z;
  const double q = half * half;
  // Gamma(3/2) Gamma(5/2) = (sqrt(pi)/2)(3 sqrt(pi)/4) = 3 pi / 8
  double term = q / (3.0 * std::numbers::pi / 8.0);
  double sum = term;
  for (int k = 0; k + 1 < ctl.max_terms; ++k) {
    term *= q / ((k + 1.5) * (k + 2.5));
    sum += term;
    if (term <= ctl.rel_tol * sum) break;
  }
  return sum;
}

}  // namespace nlvirial::specfun
