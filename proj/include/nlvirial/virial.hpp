#pragma once

// Hypervirial residuals on sampled trajectories:
//   n int_a^b x^(n-1) x'^2 dt = int_a^b x^n f dt + x(b)^n x'(b) - x(a)^n x'(a)

#include <cmath>
#include <cstddef>
#include <vector>

#include "nlvirial/errors.hpp"
#include "nlvirial/oscillator.hpp"
#include "nlvirial/quadrature.hpp"

namespace nlvirial {

struct VirialReport {
  int n = 1;
  double a = 0.0;
  double b = 0.0;
  double lhs = 0.0;       ///< n int x^(n-1) x'^2 dt
  double rhs = 0.0;       ///< int x^n f dt + boundary
  double boundary = 0.0;  ///< x(b)^n x'(b) - x(a)^n x'(a)
  double residual = 0.0;  ///< lhs - rhs
  // Filled by virial_check only: period means over [0, tau].
  double period = 0.0;
  double kinetic_mean = 0.0;  ///< <x'^2 / 2>
  double virial_mean = 0.0;   ///< <x f>
};

namespace detail {

// Integral over [a, b] of g(t, x, v): Simpson on the interior grid, with the
// sub-step pieces at either end integrated by 3-point Gauss-Legendre on the
// interpolated state.
template <class G>
double trajectory_integral(const Trajectory& traj, double a, double b, G&& g) {
  static const quadrature::GaussLegendreRule piece_rule(3);
  const double t0 = traj.start();
  const double dt = traj.dt;
  const std::size_t last = traj.size() - 1;
  auto index_at_or_after = [&](double t) {
    const double s = (t - t0) / dt;
    const double r = std::round(s);
    // Snap times within rounding of a grid point onto it.
    if (std::abs(s - r) < 1e-9) return static_cast<std::size_t>(r);
    return static_cast<std::size_t>(std::ceil(s));
  };
  auto index_at_or_before = [&](double t) {
    const double s = (t - t0) / dt;
    const double r = std::round(s);
    if (std::abs(s - r) < 1e-9) return static_cast<std::size_t>(r);
    return static_cast<std::size_t>(std::floor(s));
  };
  auto sample = [&](double t) {
    const auto [x, v] = interpolate_state(traj, t);
    return g(t, x, v);
  };
  auto piece = [&](double lo, double hi) { return hi > lo ? piece_rule.integrate(sample, lo, hi) : 0.0; };

  const std::size_t i0 = std::min(index_at_or_after(a), last);
  const std::size_t i1 = std::min(index_at_or_before(b), last);
  if (i0 >= i1) return piece(a, b);

  std::vector<double> values;
  values.reserve(i1 - i0 + 1);
  for (std::size_t i = i0; i <= i1; ++i) values.push_back(g(traj.t[i], traj.x[i], traj.v[i]));
  return piece(a, traj.t[i0]) + quadrature::composite_simpson(values, dt) + piece(traj.t[i1], b);
}

}  // namespace detail

inline VirialReport hypervirial_residual(const Trajectory& traj, const ForceModel& model, int n, double a, double b) {
  traj.validate();
  if (n < 1) throw precondition_error("hypervirial_residual: moment order n must be >= 1");
  if (!(a < b)) throw precondition_error("hypervirial_residual: need a < b");
  const double slack = 1e-9 * traj.dt;
  if (a < traj.start() - slack || b > traj.end() + slack)
    throw precondition_error("hypervirial_residual: interval outside trajectory span");
  a = std::max(a, traj.start());
  b = std::min(b, traj.end());

  const double order = static_cast<double>(n);
  VirialReport rep;
  rep.n = n;
  rep.a = a;
  rep.b = b;
  rep.lhs = order * detail::trajectory_integral(traj, a, b, [&](double, double x, double v) {
    return std::pow(x, order - 1.0) * v * v;
  });
  const double work = detail::trajectory_integral(traj, a, b, [&](double, double x, double) {
    return std::pow(x, order) * model(x);
  });
  const auto [xa, va] = interpolate_state(traj, a);
  const auto [xb, vb] = interpolate_state(traj, b);
  rep.boundary = std::pow(xb, order) * vb - std::pow(xa, order) * va;
  rep.rhs = work + rep.boundary;
  rep.residual = rep.lhs - rep.rhs;
  return rep;
}

/// n = 1 identity over one detected period [0, tau], plus the period means
/// entering 2<K> = <x f>.
inline VirialReport virial_check(const Trajectory& traj, const ForceModel& model) {
  const double tau = period_from_trajectory(traj);
  VirialReport rep = hypervirial_residual(traj, model, 1, traj.start(), traj.start() + tau);
  rep.period = tau;
  rep.kinetic_mean = 0.5 * rep.lhs / tau;
  rep.virial_mean = (rep.rhs - rep.boundary) / tau;
  return rep;
}

}  // namespace nlvirial
