#pragma once

// Chebyshev linearization of an odd force and the amplitude-dependent
// frequency it implies.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <string_view>
#include <vector>

#include "nlvirial/errors.hpp"
#include "nlvirial/oscillator.hpp"
#include "nlvirial/quadrature.hpp"
#include "nlvirial/specfun.hpp"

namespace nlvirial {

struct ChebyshevExpansion {
  double amplitude = 0.0;
  std::vector<double> coeffs;  ///< b_1, b_3, ..., b_{2N+1}
  int n_nodes = 0;
  double reconstruction_error = 0.0;  ///< max |f - sum| over a grid on [-A, A]

  /// Value of the truncated series at x.
  double evaluate(double x) const {
    const double y = x / amplitude;
    double sum = 0.0;
    for (std::size_t i = 0; i < coeffs.size(); ++i) sum += coeffs[i] * specfun::chebyshev_t(2 * static_cast<int>(i) + 1, y);
    return sum;
  }
};

enum class FrequencyMethod { chebyshev_b1, virial_cosine, ode_oracle };

inline std::string_view to_string(FrequencyMethod m) {
  switch (m) {
    case FrequencyMethod::chebyshev_b1: return "chebyshev-b1";
    case FrequencyMethod::virial_cosine: return "virial-cosine";
    case FrequencyMethod::ode_oracle: return "ode-oracle";
  }
  return "unknown";
}

struct FrequencyEstimate {
  double amplitude = 0.0;
  double omega = 0.0;
  FrequencyMethod method = FrequencyMethod::chebyshev_b1;
};

struct LinearizeOptions {
  int initial_nodes = 64;
  int max_nodes = 1 << 16;
  double tol = 1e-13;  ///< successive-doubling agreement, relative to max(1, |b|)
};

/// Coefficient of T_k(x/A) in the Chebyshev series of f on [-A, A], any k >= 0:
///   (2/pi) int (1-y^2)^(-1/2) T_k(y) f(A y) dy   (halved for k = 0)
/// by M-node Gauss-Chebyshev quadrature.
inline double chebyshev_projection(const ForceModel& model, double amplitude, int order, int n_nodes) {
  if (!(amplitude > 0.0)) throw precondition_error("chebyshev_projection: amplitude must be positive");
  if (order < 0) throw precondition_error("chebyshev_projection: order must be nonnegative");
  if (n_nodes < order + 1)
    throw precondition_error("chebyshev_projection: " + std::to_string(n_nodes) + " nodes too few for order " +
                             std::to_string(order));
  // T_k(cos theta) = cos(k theta) exactly at the nodes, but the recurrence is
  // used so the value matches chebyshev_t bit for bit.
  const double integral = quadrature::gauss_chebyshev(
      [&](double y) { return specfun::chebyshev_t(order, y) * model(amplitude * y); }, n_nodes);
  return (order == 0 ? 1.0 : 2.0) / std::numbers::pi * integral;
}

/// b_{2n+1}(A) at a fixed node count.
inline double chebyshev_coefficient(const ForceModel& model, double amplitude, int n, int n_nodes) {
  if (n < 0) throw precondition_error("chebyshev_coefficient: index must be nonnegative");
  if (n_nodes < 2 * n + 2)
    throw precondition_error("chebyshev_coefficient: n_nodes must be at least 2n + 2 (got " +
                             std::to_string(n_nodes) + " for n = " + std::to_string(n) + ")");
  return chebyshev_projection(model, amplitude, 2 * n + 1, n_nodes);
}

struct ConvergedCoefficient {
  double value;
  int n_nodes;
};

/// b_{2n+1}(A) with the node count doubled from the default until two
/// successive estimates agree.
inline ConvergedCoefficient chebyshev_coefficient_converged(const ForceModel& model, double amplitude, int n,
                                                            const LinearizeOptions& opt = {}) {
  int nodes = std::max(opt.initial_nodes, 2 * n + 2);
  double prev = chebyshev_coefficient(model, amplitude, n, nodes);
  while (nodes < opt.max_nodes) {
    nodes *= 2;
    const double cur = chebyshev_coefficient(model, amplitude, n, nodes);
    if (std::abs(cur - prev) < opt.tol * std::max(1.0, std::abs(cur))) return {cur, nodes};
    prev = cur;
  }
  throw numerical_error("chebyshev_coefficient: no convergence within " + std::to_string(opt.max_nodes) + " nodes");
}

inline ChebyshevExpansion expand_force(const ForceModel& model, double amplitude, int max_order,
                                       const LinearizeOptions& opt = {}) {
  if (max_order < 0) throw precondition_error("expand_force: max_order must be nonnegative");
  ChebyshevExpansion out;
  out.amplitude = amplitude;
  for (int n = 0; n <= max_order; ++n) {
    const auto c = chebyshev_coefficient_converged(model, amplitude, n, opt);
    out.coeffs.push_back(c.value);
    out.n_nodes = std::max(out.n_nodes, c.n_nodes);
  }
  constexpr int kCheckPoints = 201;
  for (int i = 0; i < kCheckPoints; ++i) {
    const double x = amplitude * (-1.0 + 2.0 * i / (kCheckPoints - 1));
    out.reconstruction_error = std::max(out.reconstruction_error, std::abs(model(x) - out.evaluate(x)));
  }
  return out;
}

/// omega = sqrt(b_1(A) / A).
inline FrequencyEstimate frequency_chebyshev(const ForceModel& model, double amplitude,
                                             const LinearizeOptions& opt = {}) {
  if (!(amplitude > 0.0)) throw precondition_error("frequency_chebyshev: amplitude must be positive");
  const double b1 = chebyshev_coefficient_converged(model, amplitude, 0, opt).value;
  if (!(b1 > 0.0))
    throw model_restriction_error("frequency_chebyshev: b1 = " + std::to_string(b1) + " for model " + model.name);
  return {amplitude, std::sqrt(b1 / amplitude), FrequencyMethod::chebyshev_b1};
}

/// Frequency that makes A cos(omega t) satisfy the period-averaged virial
/// theorem 2<K> = <x f>:
///   pi omega A^2 = (2A/omega) int_{-1}^{1} y f(Ay) / sqrt(1-y^2) dy.
/// The integral is taken in the time-like angle phi = omega t (y = cos phi)
/// with adaptive Gauss-Legendre, not by Chebyshev quadrature.
inline FrequencyEstimate frequency_virial_cosine(const ForceModel& model, double amplitude, double rel_tol = 1e-15) {
  if (!(amplitude > 0.0)) throw precondition_error("frequency_virial_cosine: amplitude must be positive");
  quadrature::AdaptiveOptions opt;
  opt.rel_tol = rel_tol;
  // Half period phi in [0, pi]: twice the time integral of x f over [0, tau/2].
  const double virial = quadrature::integrate_adaptive(
      [&](double phi) {
        const double y = std::cos(phi);
        return y * model(amplitude * y);
      },
      0.0, std::numbers::pi, opt);
  const double omega_sq = 2.0 * virial / (std::numbers::pi * amplitude);
  if (!(omega_sq > 0.0))
    throw model_restriction_error("frequency_virial_cosine: nonpositive virial for model " + model.name);
  return {amplitude, std::sqrt(omega_sq), FrequencyMethod::virial_cosine};
}

/// 2 pi / exact_period, the reference the linearizations are judged against.
inline FrequencyEstimate frequency_exact(const ForceModel& model, double amplitude) {
  return {amplitude, 2.0 * std::numbers::pi / exact_period(model, amplitude), FrequencyMethod::ode_oracle};
}

}  // namespace nlvirial
