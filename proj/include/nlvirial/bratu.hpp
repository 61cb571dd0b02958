#pragma once

// One-dimensional Bratu problem  u'' + lambda e^u = 0,  u(0) = u(1) = 0.
//
// Exact branch: u = -2 ln(cosh(theta (x - 1/2)) / cosh(theta / 2)) with
// lambda = 2 theta^2 / cosh^2(theta/2).  Trial branches come from inserting a
// one-parameter family u(A, x) into  int u'^2 dx = lambda int u e^u dx.

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nlvirial/errors.hpp"
#include "nlvirial/quadrature.hpp"
#include "nlvirial/roots.hpp"
#include "nlvirial/specfun.hpp"

namespace nlvirial::bratu {

enum class Family { exact, poly_trial, sine_trial, taylor, custom };

inline std::string_view to_string(Family f) {
  switch (f) {
    case Family::exact: return "exact";
    case Family::poly_trial: return "poly-trial";
    case Family::sine_trial: return "sine-trial";
    case Family::taylor: return "taylor";
    case Family::custom: return "custom";
  }
  return "unknown";
}

inline std::optional<Family> parse_family(std::string_view name) {
  for (Family f : {Family::exact, Family::poly_trial, Family::sine_trial, Family::taylor, Family::custom})
    if (to_string(f) == name) return f;
  return std::nullopt;
}

struct BranchPoint {
  double param = 0.0;  ///< theta (exact), A (trials) or lambda (taylor)
  double lambda = 0.0;
  double slope0 = 0.0;  ///< u'(0)
  Family family = Family::exact;
};

struct BifurcationBranch {
  Family family = Family::exact;
  std::vector<BranchPoint> points;
};

struct CriticalPoint {
  double param_c = 0.0;
  double lambda_c = 0.0;
  double slope0_c = 0.0;
};

// ---------------------------------------------------------------------------
// Exact solution

inline double lambda_of_theta(double theta) {
  if (!(theta >= 0.0)) throw precondition_error("lambda_of_theta: theta must be >= 0");
  const double c = std::cosh(0.5 * theta);
  return 2.0 * theta * theta / (c * c);
}

/// u'(0) = 2 theta (e^theta - 1) / (e^theta + 1), evaluated as 2 theta tanh(theta/2).
inline double exact_slope(double theta) {
  if (!(theta >= 0.0)) throw precondition_error("exact_slope: theta must be >= 0");
  return 2.0 * theta * std::tanh(0.5 * theta);
}

inline double exact_u(double theta, double x) {
  if (!(theta > 0.0)) throw precondition_error("exact_u: theta must be positive");
  return -2.0 * std::log(std::cosh(theta * (x - 0.5)) / std::cosh(0.5 * theta));
}

/// Spatial derivative of exact_u.
inline double exact_u_x(double theta, double x) {
  if (!(theta > 0.0)) throw precondition_error("exact_u_x: theta must be positive");
  return -2.0 * theta * std::tanh(theta * (x - 0.5));
}

/// Fold of lambda(theta): root of e^theta (theta - 2) - theta - 2 = 0 in [2, 3].
inline CriticalPoint critical_theta() {
  auto fold = [](double t) { return std::exp(t) * (t - 2.0) - t - 2.0; };
  const double theta_c = roots::bisect(fold, 2.0, 3.0, 1e-14);
  return {theta_c, lambda_of_theta(theta_c), exact_slope(theta_c)};
}

enum class Branch { lower, upper };

/// theta with lambda_of_theta(theta) = lambda on the requested branch.
inline double solve_theta(double lambda, Branch branch, double tol = 1e-12) {
  if (!(lambda > 0.0)) throw precondition_error("solve_theta: lambda must be positive");
  const CriticalPoint crit = critical_theta();
  if (lambda > crit.lambda_c * (1.0 + 4.0 * std::numeric_limits<double>::epsilon()))
    throw no_solution_error("solve_theta: no solution for lambda = " + std::to_string(lambda) +
                            " above lambda_c = " + std::to_string(crit.lambda_c));
  if (lambda >= crit.lambda_c) return crit.param_c;
  auto gap = [lambda](double t) { return lambda_of_theta(t) - lambda; };
  if (branch == Branch::lower) return roots::bisect(gap, 0.0, crit.param_c, tol);
  double theta_max = 2.0 * crit.param_c;
  while (lambda_of_theta(theta_max) >= lambda) theta_max *= 2.0;
  return roots::bisect(gap, crit.param_c, theta_max, tol);
}

// ---------------------------------------------------------------------------
// Trial families

/// One-parameter trial u(A, x) vanishing at x = 0 and x = 1 and positive
/// in between for A > 0.
struct TrialFamily {
  std::string name;
  std::function<double(double, double)> u;
  std::function<double(double, double)> u_x;
  std::function<double(double)> slope0;
  /// lambda(A) in closed form, when one is known.
  std::function<double(double)> closed_form;
  Family tag = Family::custom;
};

/// Closed form for u = A x (1 - x):
///   lambda = 4 A^(5/2) / (3 [sqrt(pi) (A - 2) e^(A/4) erf(sqrt(A)/2) + 2 sqrt(A)]).
/// Below A = 1e-4 the bracket cancels to O(A^(3/2)) and the series
///   lambda = 2A / (1 + A/5 + 3A^2/140)
/// is used instead.
inline double poly_trial_lambda(double a) {
  if (!(a > 0.0)) throw precondition_error("poly_trial_lambda: A must be positive");
  if (a < 1e-4) return 2.0 * a / (1.0 + a / 5.0 + 3.0 * a * a / 140.0);
  const double root = std::sqrt(a);
  const double bracket =
      std::sqrt(std::numbers::pi) * (a - 2.0) * std::exp(0.25 * a) * specfun::erf(0.5 * root) + 2.0 * root;
  return 4.0 * a * a * root / (3.0 * bracket);
}

/// Closed form for u = A sin(pi x):  lambda = A pi^3 / (2 (2 + pi (I_1(A) + L_1(A)))).
inline double sine_trial_lambda(double a) {
  if (!(a > 0.0)) throw precondition_error("sine_trial_lambda: A must be positive");
  constexpr double pi = std::numbers::pi;
  return a * pi * pi * pi / (2.0 * (2.0 + pi * (specfun::bessel_i1(a) + specfun::struve_l1(a))));
}

inline TrialFamily poly_family() {
  return {"poly-trial",
          [](double a, double x) { return a * x * (1.0 - x); },
          [](double a, double x) { return a * (1.0 - 2.0 * x); },
          [](double a) { return a; },
          [](double a) { return poly_trial_lambda(a); },
          Family::poly_trial};
}

inline TrialFamily sine_family() {
  constexpr double pi = std::numbers::pi;
  return {"sine-trial",
          [](double a, double x) { return a * std::sin(pi * x); },
          [](double a, double x) { return a * pi * std::cos(pi * x); },
          [](double a) { return pi * a; },
          [](double a) { return sine_trial_lambda(a); },
          Family::sine_trial};
}

/// lambda(A) = int_0^1 u_x^2 dx / int_0^1 u e^u dx by adaptive Gauss-Legendre.
inline double virial_lambda(const TrialFamily& family, double a, double rel_tol = 1e-14) {
  if (!(a > 0.0)) throw precondition_error("virial_lambda: A must be positive");
  quadrature::AdaptiveOptions opt;
  opt.rel_tol = rel_tol;
  const double gradient = quadrature::integrate_adaptive(
      [&](double x) {
        const double d = family.u_x(a, x);
        return d * d;
      },
      0.0, 1.0, opt);
  const double source = quadrature::integrate_adaptive(
      [&](double x) {
        const double u = family.u(a, x);
        return u * std::exp(u);
      },
      0.0, 1.0, opt);
  if (!(source > 0.0)) throw numerical_error("virial_lambda: trial " + family.name + " gives int u e^u <= 0");
  return gradient / source;
}

/// lambda(A) through the closed form when the family has one.
inline double family_lambda(const TrialFamily& family, double a) {
  return family.closed_form ? family.closed_form(a) : virial_lambda(family, a);
}

struct CriticalSearch {
  double lo = 1e-3;
  double hi = 20.0;
  int samples = 64;
  double lambda_tol = 1e-12;
};

/// Maximum location of a fold-shaped curve g on [lo, hi].  A presampling pass
/// rejects curves that are not rise-then-fall; the golden-section result is
/// then polished on the sign of a five-point derivative.
template <class G>
double locate_fold(G&& g, const CriticalSearch& search) {
  std::vector<double> values(search.samples);
  for (int i = 0; i < search.samples; ++i)
    values[i] = g(search.lo + (search.hi - search.lo) * i / (search.samples - 1));
  int turns = 0;
  bool rising = values[1] > values[0];
  if (!rising) throw no_solution_error("locate_fold: curve is not increasing at the left end of the bracket");
  for (int i = 2; i < search.samples; ++i) {
    const bool up = values[i] > values[i - 1];
    if (up != rising) {
      ++turns;
      rising = up;
    }
  }
  if (turns != 1) throw no_solution_error("locate_fold: sampled curve is not unimodal (" + std::to_string(turns) + " turns)");

  const auto peak = roots::golden_section_maximize(g, search.lo, search.hi, search.lambda_tol, 1e-6);
  const double h = 1e-3 * std::max(1.0, std::abs(peak.x));
  return roots::polish_stationary_point(g, peak.x, 1e-4 * std::max(1.0, std::abs(peak.x)), h);
}

inline CriticalPoint trial_critical_point(const TrialFamily& family, const CriticalSearch& search = {}) {
  auto lam = [&](double a) { return family_lambda(family, a); };
  const double a_c = locate_fold(lam, search);
  return {a_c, lam(a_c), family.slope0(a_c)};
}

// ---------------------------------------------------------------------------
// Linearized (e^u ~ 1 + u) solution

inline void check_taylor_domain(double lambda, const char* who) {
  constexpr double pi2 = std::numbers::pi * std::numbers::pi;
  if (!(lambda > 0.0 && lambda < pi2))
    throw precondition_error(std::string(who) + ": lambda must lie in (0, pi^2)");
}

inline double taylor_solution(double lambda, double x) {
  check_taylor_domain(lambda, "taylor_solution");
  const double k = std::sqrt(lambda);
  return std::cos(k * x) + std::tan(0.5 * k) * std::sin(k * x) - 1.0;
}

inline double taylor_slope(double lambda) {
  check_taylor_domain(lambda, "taylor_slope");
  const double k = std::sqrt(lambda);
  return k * std::tan(0.5 * k);
}

// ---------------------------------------------------------------------------
// Parametric sweeps

struct SweepLimits {
  double theta_upper = 8.0;
  double lambda_floor = 0.5;  ///< trial sweeps continue past the fold until lambda drops below this
};

namespace detail {

/// n points on [0, upper] with the fold parameter placed exactly on the grid;
/// each side is uniform.
inline std::vector<double> folded_grid(double fold, double upper, int n) {
  std::vector<double> grid(n);
  if (n == 2) {
    grid[0] = 0.0;
    grid[1] = upper;
    return grid;
  }
  int kc = static_cast<int>(std::lround((n - 1) * fold / upper));
  kc = std::clamp(kc, 1, n - 2);
  for (int k = 0; k <= kc; ++k) grid[k] = fold * k / kc;
  for (int k = kc + 1; k < n; ++k) grid[k] = fold + (upper - fold) * (k - kc) / (n - 1 - kc);
  grid[kc] = fold;
  grid[n - 1] = upper;
  return grid;
}

/// First A past the fold at which lambda falls to the floor, rounded up to
/// a tidy value.
inline double trial_upper_limit(const TrialFamily& family, double a_c, double floor) {
  auto lam = [&](double a) { return family_lambda(family, a); };
  double hi = 2.0 * a_c;
  while (lam(hi) >= floor) hi *= 1.5;
  const double crossing = roots::bisect([&](double a) { return lam(a) - floor; }, a_c, hi, 1e-10);
  return std::ceil(crossing * 10.0) / 10.0;
}

}  // namespace detail

inline BifurcationBranch exact_branch(int n_points, const SweepLimits& limits = {}) {
  const CriticalPoint crit = critical_theta();
  BifurcationBranch out{Family::exact, {}};
  for (double theta : detail::folded_grid(crit.param_c, limits.theta_upper, n_points)) {
    if (theta == crit.param_c)
      out.points.push_back({theta, crit.lambda_c, crit.slope0_c, Family::exact});
    else
      out.points.push_back({theta, lambda_of_theta(theta), exact_slope(theta), Family::exact});
  }
  return out;
}

inline BifurcationBranch trial_branch(const TrialFamily& family, int n_points, const SweepLimits& limits = {}) {
  const CriticalPoint crit = trial_critical_point(family);
  const double upper = detail::trial_upper_limit(family, crit.param_c, limits.lambda_floor);
  BifurcationBranch out{family.tag, {}};
  for (double a : detail::folded_grid(crit.param_c, upper, n_points)) {
    if (a == 0.0)
      out.points.push_back({0.0, 0.0, family.slope0(0.0), family.tag});
    else if (a == crit.param_c)
      out.points.push_back({a, crit.lambda_c, crit.slope0_c, family.tag});
    else
      out.points.push_back({a, family_lambda(family, a), family.slope0(a), family.tag});
  }
  return out;
}

/// Taylor branch on the open interval (0, min(lambda_c, pi^2)).
inline BifurcationBranch taylor_branch(int n_points) {
  constexpr double pi2 = std::numbers::pi * std::numbers::pi;
  const double top = std::min(critical_theta().lambda_c, pi2);
  BifurcationBranch out{Family::taylor, {}};
  for (int k = 1; k <= n_points; ++k) {
    const double lambda = top * k / (n_points + 1);
    out.points.push_back({lambda, lambda, taylor_slope(lambda), Family::taylor});
  }
  return out;
}

inline std::vector<BifurcationBranch> bifurcation_diagram(const std::vector<Family>& families, int n_points,
                                                          const SweepLimits& limits = {}) {
  if (n_points < 2) throw precondition_error("bifurcation_diagram: n_points must be >= 2");
  std::vector<BifurcationBranch> out;
  for (Family f : families) {
    switch (f) {
      case Family::exact: out.push_back(exact_branch(n_points, limits)); break;
      case Family::poly_trial: out.push_back(trial_branch(poly_family(), n_points, limits)); break;
      case Family::sine_trial: out.push_back(trial_branch(sine_family(), n_points, limits)); break;
      case Family::taylor: out.push_back(taylor_branch(n_points)); break;
      case Family::custom: throw precondition_error("bifurcation_diagram: custom families need trial_branch()");
    }
  }
  return out;
}

}  // namespace nlvirial::bratu
