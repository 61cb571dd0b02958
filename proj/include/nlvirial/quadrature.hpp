#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <span>
#include <vector>

#include "nlvirial/errors.hpp"

namespace nlvirial::quadrature {

/// Gauss-Legendre nodes and weights on [-1, 1].
class GaussLegendreRule {
public:
  explicit GaussLegendreRule(int n) : nodes_(n), weights_(n) {
    if (n < 1) throw precondition_error("GaussLegendreRule: need at least one node");
    // Newton iteration on P_n from the Chebyshev-like initial guess; nodes
    // are symmetric so only half are computed.
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
      double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
      double dp = 0.0;
      for (int iter = 0; iter < 100; ++iter) {
        double p0 = 1.0;
        double p1 = 0.0;
        for (int j = 1; j <= n; ++j) {
          const double p2 = p1;
          p1 = p0;
          p0 = ((2.0 * j - 1.0) * z * p1 - (j - 1.0) * p2) / j;
        }
        dp = n * (z * p0 - p1) / (z * z - 1.0);
        const double dz = p0 / dp;
        z -= dz;
        if (std::abs(dz) < 1e-16) break;
      }
      // Recompute the derivative at the converged node for the weight.
      double p0 = 1.0;
      double p1 = 0.0;
      for (int j = 1; j <= n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j - 1.0) * z * p1 - (j - 1.0) * p2) / j;
      }
      dp = n * (z * p0 - p1) / (z * z - 1.0);
      const double w = 2.0 / ((1.0 - z * z) * dp * dp);
      nodes_[i] = -z;
      nodes_[n - 1 - i] = z;
      weights_[i] = w;
      weights_[n - 1 - i] = w;
    }
    if (n % 2 == 1) nodes_[n / 2] = 0.0;
  }

  int size() const noexcept { return static_cast<int>(nodes_.size()); }
  std::span<const double> nodes() const noexcept { return nodes_; }
  std::span<const double> weights() const noexcept { return weights_; }

  template <class F>
  double integrate(F&& f, double a, double b) const {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double sum = 0.0;
    for (std::size_t i = 0; i < nodes_.size(); ++i) sum += weights_[i] * f(mid + half * nodes_[i]);
    return half * sum;
  }

private:
  std::vector<double> nodes_;
  std::vector<double> weights_;
};

struct AdaptiveOptions {
  double rel_tol = 1e-13;
  double abs_tol = 1e-300;
  int max_depth = 30;
  long max_panels = 100000;
};

namespace detail {

inline const GaussLegendreRule& adaptive_rule() {
  static const GaussLegendreRule rule(15);
  return rule;
}

template <class F>
double adaptive_step(F& f, double a, double b, double whole, double tol, int depth, const AdaptiveOptions& opt,
                     long& panels) {
  const GaussLegendreRule& rule = adaptive_rule();
  const double mid = 0.5 * (a + b);
  const double left = rule.integrate(f, a, mid);
  const double right = rule.integrate(f, mid, b);
  const double refined = left + right;
  panels += 2;
  const double diff = std::abs(refined - whole);
  // Below the roundoff floor further splitting only chases noise.
  const double noise = 32.0 * std::numeric_limits<double>::epsilon() * (std::abs(left) + std::abs(right));
  if (diff <= tol || diff <= noise || depth >= opt.max_depth || panels >= opt.max_panels) return refined;
  return adaptive_step(f, a, mid, left, 0.5 * tol, depth + 1, opt, panels) +
         adaptive_step(f, mid, b, right, 0.5 * tol, depth + 1, opt, panels);
}

}  // namespace detail

/// Globally adaptive Gauss-Legendre: a 15-point panel is accepted when its
/// two halves agree with it to the local share of the tolerance.
template <class F>
double integrate_adaptive(F&& f, double a, double b, const AdaptiveOptions& opt = {}) {
  if (a == b) return 0.0;
  const GaussLegendreRule& rule = detail::adaptive_rule();
  // Seed with a few panels so a coarse first estimate cannot fool the test.
  constexpr int kSeedPanels = 4;
  const double width = (b - a) / kSeedPanels;
  double estimate = 0.0;
  double panels[kSeedPanels];
  for (int i = 0; i < kSeedPanels; ++i) {
    const double lo = a + i * width;
    const double hi = (i + 1 == kSeedPanels) ? b : lo + width;
    panels[i] = rule.integrate(f, lo, hi);
    estimate += panels[i];
  }
  const double tol = std::max(opt.abs_tol, opt.rel_tol * std::abs(estimate));
  double total = 0.0;
  long used = kSeedPanels;
  for (int i = 0; i < kSeedPanels; ++i) {
    const double lo = a + i * width;
    const double hi = (i + 1 == kSeedPanels) ? b : lo + width;
    total += detail::adaptive_step(f, lo, hi, panels[i], tol / kSeedPanels, 0, opt, used);
  }
  return total;
}

/// Gauss-Chebyshev node y_k = cos((2k-1) pi / (2M)), k = 1..M.
inline double gauss_chebyshev_node(int k, int m) {
  return std::cos((2.0 * k - 1.0) * std::numbers::pi / (2.0 * m));
}

/// Estimate of  int_{-1}^{1} g(y) / sqrt(1 - y^2) dy  with M equal weights pi/M.
/// Exact for polynomial g of degree < 2M.
template <class G>
double gauss_chebyshev(G&& g, int m) {
  if (m < 1) throw precondition_error("gauss_chebyshev: need at least one node");
  double sum = 0.0;
  for (int k = 1; k <= m; ++k) sum += g(gauss_chebyshev_node(k, m));
  return std::numbers::pi / m * sum;
}

/// Composite rule over uniformly spaced samples with spacing h.  Simpson on
/// pairs of intervals, with Simpson 3/8 closing an odd interval count so the
/// whole rule stays fourth order.  Two samples fall back to the trapezoid.
inline double composite_simpson(std::span<const double> y, double h) {
  const std::size_t n = y.size();
  if (n < 2) return 0.0;
  if (n == 2) return 0.5 * h * (y[0] + y[1]);
  const std::size_t intervals = n - 1;
  std::size_t simpson_end = intervals;  // index of last sample covered by 1/3 rule
  double sum = 0.0;
  if (intervals % 2 == 1) {
    simpson_end = intervals - 3;
    sum += 3.0 * h / 8.0 * (y[simpson_end] + 3.0 * y[simpson_end + 1] + 3.0 * y[simpson_end + 2] + y[simpson_end + 3]);
  }
  if (simpson_end > 0) {
    double odd = 0.0;
    double even = 0.0;
    for (std::size_t i = 1; i < simpson_end; ++i) (i % 2 ? odd : even) += y[i];
    sum += h / 3.0 * (y[0] + y[simpson_end] + 4.0 * odd + 2.0 * even);
  }
  return sum;
}

}  // namespace nlvirial::quadrature
