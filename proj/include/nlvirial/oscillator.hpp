#pragma once

// Conservative oscillators  x'' + f(x) = 0  with x(0) = A, x'(0) = 0.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nlvirial/errors.hpp"
#include "nlvirial/quadrature.hpp"
#include "nlvirial/roots.hpp"

namespace nlvirial {

using RealMap = std::function<double(double)>;

/// An odd restoring force, optionally with its potential V (V' = f, V(0) = 0).
struct ForceModel {
  std::string name;
  RealMap force;
  std::optional<RealMap> potential;

  double operator()(double x) const { return force(x); }
  bool has_potential() const noexcept { return potential.has_value(); }
};

/// Checks f(-x) = -f(x) and x f(x) > 0 on `samples` points spread over [-A, A].
inline void validate_model(const ForceModel& model, double amplitude, int samples = 64) {
  if (!(amplitude > 0.0)) return;
  for (int i = 1; i <= samples; ++i) {
    const double x = amplitude * i / samples;
    const double fp = model(x);
    const double fm = model(-x);
    if (!std::isfinite(fp) || !std::isfinite(fm))
      throw model_restriction_error(model.name + ": force is not finite at x = " + std::to_string(x));
    if (std::abs(fp + fm) > 1e-10 * std::max(1.0, std::abs(fp)))
      throw model_restriction_error(model.name + ": force is not odd at x = " + std::to_string(x));
    if (!(x * fp > 0.0))
      throw model_restriction_error(model.name + ": x f(x) <= 0 at x = " + std::to_string(x));
  }
}

namespace models {

inline ForceModel linear() {
  return {"linear", [](double x) { return x; }, RealMap{[](double x) { return 0.5 * x * x; }}};
}

inline ForceModel duffing(double epsilon = 1.0) {
  return {"duffing", [epsilon](double x) { return x + epsilon * x * x * x; },
          RealMap{[epsilon](double x) {
            const double x2 = x * x;
            return 0.5 * x2 + 0.25 * epsilon * x2 * x2;
          }}};
}

inline ForceModel cubic() {
  return {"cubic", [](double x) { return x * x * x; }, RealMap{[](double x) {
            const double x2 = x * x;
            return 0.25 * x2 * x2;
          }}};
}

inline ForceModel quintic() {
  return {"quintic", [](double x) {
            const double x2 = x * x;
            return x2 * x2 * x;
          },
          RealMap{[](double x) {
            const double x2 = x * x;
            return x2 * x2 * x2 / 6.0;
          }}};
}

inline ForceModel hyperbolic_sine() {
  return {"sinh", [](double x) { return std::sinh(x); },
          // cosh(x) - 1 = 2 sinh^2(x/2) without cancellation near 0
          RealMap{[](double x) {
            const double s = std::sinh(0.5 * x);
            return 2.0 * s * s;
          }}};
}

}  // namespace models

/// The built-in benchmark suite, in a fixed order.
inline std::vector<ForceModel> registered_models() {
  return {models::linear(), models::duffing(), models::cubic(), models::quintic(), models::hyperbolic_sine()};
}

inline std::vector<std::string> registered_model_names() {
  std::vector<std::string> names;
  for (const auto& m : registered_models()) names.push_back(m.name);
  return names;
}

inline std::optional<ForceModel> find_model(std::string_view name) {
  for (auto& m : registered_models())
    if (m.name == name) return m;
  return std::nullopt;
}

/// Uniformly sampled (t, x, x') record.
struct Trajectory {
  std::vector<double> t;
  std::vector<double> x;
  std::vector<double> v;
  double dt = 0.0;

  std::size_t size() const noexcept { return t.size(); }
  double start() const { return t.front(); }
  double end() const { return t.back(); }

  void validate() const {
    if (t.size() < 2 || x.size() != t.size() || v.size() != t.size())
      throw precondition_error("Trajectory: need at least two samples of equal-length t, x, v");
    if (!(dt > 0.0)) throw precondition_error("Trajectory: dt must be positive");
  }
};

/// Samples closed-form x(t), x'(t) on t_k = k dt, k = 0..n_steps.
template <class X, class V>
Trajectory sample_trajectory(X&& position, V&& velocity, double dt, std::size_t n_steps) {
  if (!(dt > 0.0) || n_steps < 1) throw precondition_error("sample_trajectory: need dt > 0 and n_steps >= 1");
  Trajectory traj;
  traj.dt = dt;
  traj.t.reserve(n_steps + 1);
  traj.x.reserve(n_steps + 1);
  traj.v.reserve(n_steps + 1);
  for (std::size_t k = 0; k <= n_steps; ++k) {
    const double t = static_cast<double>(k) * dt;
    traj.t.push_back(t);
    traj.x.push_back(position(t));
    traj.v.push_back(velocity(t));
  }
  return traj;
}

/// Classical fixed-step RK4 for x'' = -f(x) from (A, 0).
inline Trajectory integrate(const ForceModel& model, double amplitude, double dt, std::size_t n_steps) {
  if (!(amplitude >= 0.0)) throw precondition_error("integrate: amplitude must be nonnegative");
  if (!(dt > 0.0)) throw precondition_error("integrate: dt must be positive");
  if (n_steps < 1) throw precondition_error("integrate: n_steps must be positive");
  validate_model(model, amplitude);

  Trajectory traj;
  traj.dt = dt;
  traj.t.resize(n_steps + 1);
  traj.x.resize(n_steps + 1);
  traj.v.resize(n_steps + 1);
  double x = amplitude;
  double v = 0.0;
  traj.t[0] = 0.0;
  traj.x[0] = x;
  traj.v[0] = v;
  const double half = 0.5 * dt;
  for (std::size_t k = 1; k <= n_steps; ++k) {
    const double k1x = v;
    const double k1v = -model(x);
    const double k2x = v + half * k1v;
    const double k2v = -model(x + half * k1x);
    const double k3x = v + half * k2v;
    const double k3v = -model(x + half * k2x);
    const double k4x = v + dt * k3v;
    const double k4v = -model(x + dt * k3x);
    x += dt / 6.0 * (k1x + 2.0 * k2x + 2.0 * k3x + k4x);
    v += dt / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
    if (!std::isfinite(x) || !std::isfinite(v))
      throw integration_error("integrate: non-finite state for model " + model.name, k);
    traj.t[k] = static_cast<double>(k) * dt;
    traj.x[k] = x;
    traj.v[k] = v;
  }
  return traj;
}

inline double energy(const ForceModel& model, double x, double v) {
  if (!model.potential) throw precondition_error("energy: model " + model.name + " has no potential");
  return 0.5 * v * v + (*model.potential)(x);
}

/// tau = 4 int_0^A dx / sqrt(2 (V(A) - V(x))), with x = A cos(delta) removing
/// the inverse-square-root endpoint singularity.
inline double exact_period(const ForceModel& model, double amplitude, double rel_tol = 1e-13) {
  if (!model.potential) throw precondition_error("exact_period: model " + model.name + " has no potential");
  if (!(amplitude > 0.0)) throw precondition_error("exact_period: amplitude must be positive");
  const RealMap& pot = *model.potential;
  const double top = pot(amplitude);
  constexpr int kMonotoneSamples = 64;
  double prev = pot(0.0);
  for (int i = 1; i <= kMonotoneSamples; ++i) {
    const double cur = pot(amplitude * i / kMonotoneSamples);
    if (!(cur > prev)) throw model_restriction_error("exact_period: potential of " + model.name + " not increasing on [0, A]");
    prev = cur;
  }

  // Near the turning point V(A) - V(x) cancels; there it is taken as the work
  // of f over the gap [A - gap, A], with the gap A (1 - cos delta) = 2A sin^2(delta/2)
  // formed directly so no digits are lost.
  static const quadrature::GaussLegendreRule drop_rule(12);
  auto potential_drop = [&](double delta) {
    const double s = std::sin(0.5 * delta);
    const double gap = 2.0 * amplitude * s * s;
    if (gap < 0.05 * amplitude) {
      double work = 0.0;
      for (int i = 0; i < drop_rule.size(); ++i)
        work += drop_rule.weights()[i] * model(amplitude - 0.5 * gap * (1.0 + drop_rule.nodes()[i]));
      return 0.5 * gap * work;
    }
    return top - pot(amplitude * std::cos(delta));
  };
  auto integrand = [&](double delta) {
    if (delta <= 0.0) return std::sqrt(amplitude / model(amplitude));
    return amplitude * std::sin(delta) / std::sqrt(2.0 * potential_drop(delta));
  };
  quadrature::AdaptiveOptions opt;
  opt.rel_tol = rel_tol;
  return 4.0 * quadrature::integrate_adaptive(integrand, 0.0, 0.5 * std::numbers::pi, opt);
}

namespace detail {

/// Lagrange interpolation through samples [first, first + count) of `y`.
inline double lagrange(std::span<const double> t, std::span<const double> y, std::size_t first, std::size_t count,
                       double at) {
  double sum = 0.0;
  for (std::size_t i = first; i < first + count; ++i) {
    double w = 1.0;
    for (std::size_t j = first; j < first + count; ++j)
      if (j != i) w *= (at - t[j]) / (t[i] - t[j]);
    sum += w * y[i];
  }
  return sum;
}

/// Start of a `width`-point stencil centred on the interval [i, i+1].
inline std::size_t stencil_start(std::size_t i, std::size_t width, std::size_t n) {
  const std::size_t back = (width - 1) / 2;
  std::size_t first = i >= back ? i - back : 0;
  if (first + width > n) first = n - width;
  return first;
}

}  // namespace detail

/// Interpolated state at time `at` from a six-point Lagrange stencil (or
/// fewer when the trajectory is short).
inline std::pair<double, double> interpolate_state(const Trajectory& traj, double at) {
  traj.validate();
  const std::size_t n = traj.size();
  if (at < traj.start() || at > traj.end())
    throw precondition_error("interpolate_state: time outside trajectory span");
  std::size_t i = static_cast<std::size_t>(std::floor((at - traj.start()) / traj.dt));
  i = std::min(i, n - 2);
  const std::size_t width = std::min<std::size_t>(6, n);
  const std::size_t first = detail::stencil_start(i, width, n);
  return {detail::lagrange(traj.t, traj.x, first, width, at), detail::lagrange(traj.t, traj.v, first, width, at)};
}

/// Time of the first return of x' to zero with x > 0 (one full period for a
/// trajectory started at rest at x = A > 0).
inline double period_from_trajectory(const Trajectory& traj) {
  traj.validate();
  const std::size_t n = traj.size();
  // The orbit goes x' < 0 (first half) then x' > 0; the period ends at the
  // first + to - sign change of x' while x > 0.
  bool seen_negative = false;
  bool seen_positive = false;
  for (std::size_t k = 1; k < n; ++k) {
    if (traj.v[k] < 0.0 && !seen_positive) seen_negative = true;
    if (seen_negative && traj.v[k] > 0.0) seen_positive = true;
    if (seen_positive && traj.v[k - 1] > 0.0 && traj.v[k] <= 0.0 && traj.x[k] > 0.0) {
      if (traj.v[k] == 0.0) return traj.t[k];
      const std::size_t width = std::min<std::size_t>(6, n);
      const std::size_t first = detail::stencil_start(k - 1, width, n);
      auto vel = [&](double s) { return detail::lagrange(traj.t, traj.v, first, width, s); };
      return roots::bisect(vel, traj.t[k - 1], traj.t[k], 1e-15 * std::max(1.0, traj.t[k]));
    }
  }
  throw numerical_error("period_from_trajectory: no completed period found in trajectory");
}

}  // namespace nlvirial
