// nlvirial: frequency sweeps, virial diagnostics and Bratu bifurcation data.
//
// Exit status: 0 success, 2 usage error, 1 numerical failure.

#include <cstdio>
#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nlvirial/commands.hpp"

namespace {

using nlvirial::Table;
namespace cmd = nlvirial::commands;

// "3" -> (3, 3); "1..3" -> (1, 3)
std::pair<int, int> parse_order_range(const std::string& text) {
  try {
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
      const int n = std::stoi(text);
      return {n, n};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw cmd::usage_error("--n expects N or N..M, got '" + text + "'");
  }
}

void emit(const Table& table, const std::string& format) {
  std::cout << (format == "json" ? table.to_json() : table.to_csv());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Virial-theorem linearization of nonlinear oscillators and the Bratu problem"};
  app.require_subcommand(1);
  std::string format = "csv";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));

  cmd::FreqConfig freq;
  std::string freq_plot;
  auto* freq_cmd = app.add_subcommand("freq", "Amplitude-frequency sweep: Chebyshev, virial-cosine and exact");
  freq_cmd->add_option("--model", freq.model, "Force model (linear, duffing, cubic, quintic, sinh)");
  freq_cmd->add_option("--amin", freq.amin, "Smallest amplitude");
  freq_cmd->add_option("--amax", freq.amax, "Largest amplitude");
  freq_cmd->add_option("--count", freq.count, "Number of amplitudes");
  freq_cmd->add_option("--tol", freq.tol, "Node-doubling tolerance for b1");
  freq_cmd->add_option("--plot", freq_plot, "Write an SVG plot to this path");
  freq_cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));

  cmd::VirialConfig virial;
  std::string orders = "1";
  auto* virial_cmd = app.add_subcommand("virial", "Hypervirial residuals over one integrated period");
  virial_cmd->add_option("--model", virial.model, "Force model");
  virial_cmd->add_option("--amplitude", virial.amplitude, "Initial amplitude A");
  virial_cmd->add_option("--n", orders, "Moment order N or range N..M");
  virial_cmd->add_option("--steps", virial.steps_per_period, "RK4 steps per linearized period");
  virial_cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));

  cmd::BratuConfig bratu;
  std::string bratu_plot;
  auto* bratu_cmd = app.add_subcommand("bratu", "Bratu bifurcation diagram (lambda, u'(0)) per family");
  bratu.families = {"all"};
  bratu_cmd->add_option("--families", bratu.families, "Comma list of exact, poly-trial, sine-trial, taylor, or all")
      ->delimiter(',');
  bratu_cmd->add_option("--count", bratu.count, "Points per family");
  bratu_cmd->add_option("--theta-max", bratu.theta_upper, "Upper theta of the exact sweep");
  bratu_cmd->add_option("--lambda-floor", bratu.lambda_floor, "Trial sweeps stop once lambda falls below this");
  bratu_cmd->add_option("--plot", bratu_plot, "Write an SVG plot to this path");
  bratu_cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));

  cmd::CriticalConfig critical;
  auto* critical_cmd = app.add_subcommand("critical", "Fold parameters of the exact and trial branches");
  critical_cmd->add_option("--tol", critical.tol, "Golden-section tolerance on lambda");
  critical_cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*freq_cmd) {
      if (!freq_plot.empty()) freq.plot_path = freq_plot;
      emit(cmd::cmd_freq(freq), format);
    } else if (*virial_cmd) {
      std::tie(virial.n_min, virial.n_max) = parse_order_range(orders);
      emit(cmd::cmd_virial(virial), format);
    } else if (*bratu_cmd) {
      if (!bratu_plot.empty()) bratu.plot_path = bratu_plot;
      emit(cmd::cmd_bratu(bratu), format);
    } else if (*critical_cmd) {
      emit(cmd::cmd_critical(critical), format);
    }
  } catch (const nlvirial::precondition_error& e) {
    std::cerr << "nlvirial: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "nlvirial: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
