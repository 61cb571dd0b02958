#pragma once

// Table-producing drivers behind the command-line tool.  Each returns a
// Table in deterministic grid order; the tool only parses flags and prints.

#include <cmath>
#include <cstddef>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "nlvirial/bratu.hpp"
#include "nlvirial/errors.hpp"
#include "nlvirial/linearize.hpp"
#include "nlvirial/oscillator.hpp"
#include "nlvirial/svg_plot.hpp"
#include "nlvirial/table.hpp"
#include "nlvirial/virial.hpp"

namespace nlvirial::commands {

/// Unknown names and malformed ranges; the tool exits with status 2.
class usage_error : public precondition_error {
public:
  using precondition_error::precondition_error;
};

inline ForceModel require_model(const std::string& name) {
  if (auto m = find_model(name)) return *m;
  std::string known;
  for (const auto& n : registered_model_names()) known += (known.empty() ? "" : ", ") + n;
  throw usage_error("unknown model '" + name + "'; registered models: " + known);
}

/// count points spanning [lo, hi]; a degenerate range yields the single point.
inline std::vector<double> linear_grid(double lo, double hi, int count) {
  if (!(lo <= hi)) throw usage_error("range minimum must not exceed maximum");
  if (lo == hi) return {lo};
  if (count < 2) throw usage_error("count must be >= 2");
  std::vector<double> grid(count);
  for (int i = 0; i < count; ++i) grid[i] = lo + (hi - lo) * i / (count - 1);
  grid.back() = hi;
  return grid;
}

struct FreqConfig {
  std::string model = "duffing";
  double amin = 0.1;
  double amax = 2.0;
  int count = 20;
  double tol = 1e-13;
  std::optional<std::string> plot_path;
};

inline Table cmd_freq(const FreqConfig& cfg) {
  const ForceModel model = require_model(cfg.model);
  if (!(cfg.amin > 0.0)) throw usage_error("amplitudes must be positive");
  LinearizeOptions opt;
  opt.tol = cfg.tol;
  Table table({{"A", "%.12g"},
               {"omega_chebyshev", "%.15g"},
               {"omega_virial_cosine", "%.15g"},
               {"omega_oracle", "%.15g"},
               {"rel_error", "%.6e"}});
  PlotSeries cheb{"chebyshev b1", {}, false};
  PlotSeries oracle{"exact period", {}, true};
  for (double a : linear_grid(cfg.amin, cfg.amax, cfg.count)) {
    const double w_cheb = frequency_chebyshev(model, a, opt).omega;
    const double w_vir = frequency_virial_cosine(model, a).omega;
    const double w_ref = frequency_exact(model, a).omega;
    table.add_row({a, w_cheb, w_vir, w_ref, std::abs(w_cheb - w_ref) / w_ref});
    cheb.points.emplace_back(a, w_cheb);
    oracle.points.emplace_back(a, w_ref);
  }
  if (cfg.plot_path) write_svg(*cfg.plot_path, {cheb, oracle}, "amplitude A", "omega");
  return table;
}

struct VirialConfig {
  std::string model = "duffing";
  double amplitude = 1.0;
  int n_min = 1;
  int n_max = 1;
  int steps_per_period = 2000;
};

/// One-period trajectory of the model at dt = tau_lin / steps, with
/// tau_lin from the Chebyshev frequency.
inline Trajectory one_period_trajectory(const ForceModel& model, double amplitude, int steps_per_period) {
  const double tau_lin = 2.0 * std::numbers::pi / frequency_chebyshev(model, amplitude).omega;
  const double dt = tau_lin / steps_per_period;
  // Linearized periods can be off by several percent; integrate well past one.
  const auto n_steps = static_cast<std::size_t>(std::ceil(1.5 * steps_per_period));
  return integrate(model, amplitude, dt, n_steps);
}

inline Table cmd_virial(const VirialConfig& cfg) {
  const ForceModel model = require_model(cfg.model);
  if (!(cfg.amplitude > 0.0)) throw usage_error("amplitude must be positive");
  if (cfg.n_min < 1 || cfg.n_max < cfg.n_min) throw usage_error("moment orders must satisfy 1 <= n_min <= n_max");
  if (cfg.steps_per_period < 8) throw usage_error("steps per period must be >= 8");
  const Trajectory traj = one_period_trajectory(model, cfg.amplitude, cfg.steps_per_period);
  const double tau = period_from_trajectory(traj);
  Table table({{"n", "%.0f"},
               {"a", "%.12g"},
               {"b", "%.12g"},
               {"lhs", "%.12e"},
               {"rhs", "%.12e"},
               {"boundary", "%.6e"},
               {"residual", "%.6e"}});
  for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
    const VirialReport r = hypervirial_residual(traj, model, n, 0.0, tau);
    table.add_row({static_cast<double>(n), r.a, r.b, r.lhs, r.rhs, r.boundary, r.residual});
  }
  return table;
}

struct BratuConfig {
  std::vector<std::string> families = {"exact", "poly-trial", "sine-trial", "taylor"};
  int count = 201;
  double theta_upper = 8.0;
  double lambda_floor = 0.5;
  std::optional<std::string> plot_path;
};

inline std::vector<bratu::Family> parse_families(const std::vector<std::string>& names) {
  std::vector<bratu::Family> out;
  for (const auto& n : names) {
    if (n == "all") {
      out = {bratu::Family::exact, bratu::Family::poly_trial, bratu::Family::sine_trial, bratu::Family::taylor};
      continue;
    }
    const auto f = bratu::parse_family(n);
    if (!f || *f == bratu::Family::custom)
      throw usage_error("unknown family '" + n + "'; expected exact, poly-trial, sine-trial, taylor or all");
    out.push_back(*f);
  }
  if (out.empty()) throw usage_error("no families requested");
  return out;
}

inline Table cmd_bratu(const BratuConfig& cfg) {
  const auto families = parse_families(cfg.families);
  if (cfg.count < 2) throw usage_error("count must be >= 2");
  bratu::SweepLimits limits;
  limits.theta_upper = cfg.theta_upper;
  limits.lambda_floor = cfg.lambda_floor;
  const auto branches = bratu::bifurcation_diagram(families, cfg.count, limits);
  Table table({{"family", ""}, {"param", "%.12g"}, {"lambda", "%.12g"}, {"slope0", "%.12g"}});
  std::vector<PlotSeries> series;
  for (const auto& branch : branches) {
    PlotSeries s{std::string(bratu::to_string(branch.family)), {}, branch.family == bratu::Family::taylor};
    for (const auto& p : branch.points) {
      table.add_row({std::string(bratu::to_string(p.family)), p.param, p.lambda, p.slope0});
      s.points.emplace_back(p.lambda, p.slope0);
    }
    series.push_back(std::move(s));
  }
  if (cfg.plot_path) write_svg(*cfg.plot_path, series, "lambda", "u'(0)");
  return table;
}

struct CriticalConfig {
  double tol = 1e-12;
};

inline Table cmd_critical(const CriticalConfig& cfg = {}) {
  bratu::CriticalSearch search;
  search.lambda_tol = cfg.tol;
  Table table({{"family", ""}, {"param_c", "%.9f"}, {"lambda_c", "%.9f"}, {"slope0_c", "%.9f"}});
  const auto exact = bratu::critical_theta();
  table.add_row({std::string("exact"), exact.param_c, exact.lambda_c, exact.slope0_c});
  for (const auto& family : {bratu::poly_family(), bratu::sine_family()}) {
    const auto c = bratu::trial_critical_point(family, search);
    table.add_row({family.name, c.param_c, c.lambda_c, c.slope0_c});
  }
  return table;
}

}  // namespace nlvirial::commands
