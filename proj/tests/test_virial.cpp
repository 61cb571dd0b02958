#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "nlvirial/linearize.hpp"
#include "nlvirial/virial.hpp"

using namespace nlvirial;

namespace nlvirial {
void PrintTo(const ForceModel& m, std::ostream* os) { *os << m.name; }
}  // namespace nlvirial

namespace {

Trajectory harmonic_cosine(std::size_t steps_per_period, double periods) {
  const double dt = 2.0 * std::numbers::pi / steps_per_period;
  return sample_trajectory([](double t) { return std::cos(t); }, [](double t) { return -std::sin(t); }, dt,
                           static_cast<std::size_t>(periods * steps_per_period));
}

Trajectory cosine_ansatz(double amplitude, double omega, std::size_t steps_per_period) {
  const double dt = 2.0 * std::numbers::pi / omega / steps_per_period;
  return sample_trajectory([=](double t) { return amplitude * std::cos(omega * t); },
                           [=](double t) { return -amplitude * omega * std::sin(omega * t); }, dt,
                           steps_per_period + steps_per_period / 4);
}

double n1_residual(const ForceModel& m, int steps_per_period) {
  const double tau = exact_period(m, 1.0);
  const auto traj = integrate(m, 1.0, tau / steps_per_period, steps_per_period + steps_per_period / 4);
  return std::abs(virial_check(traj, m).residual);
}

}  // namespace

TEST(Hypervirial, HarmonicFirstMoment) {
  const auto traj = harmonic_cosine(2000, 1.0);
  const auto r = hypervirial_residual(traj, models::linear(), 1, 0.0, 2.0 * std::numbers::pi);
  EXPECT_NEAR(r.lhs, std::numbers::pi, 1e-12);
  EXPECT_NEAR(r.rhs, std::numbers::pi, 1e-12);
  EXPECT_NEAR(r.residual, 0.0, 1e-12);
  EXPECT_EQ(r.residual, r.lhs - r.rhs);
}

TEST(Hypervirial, HarmonicSecondMomentCancels) {
  const auto traj = harmonic_cosine(2000, 1.0);
  const auto r = hypervirial_residual(traj, models::linear(), 2, 0.0, 2.0 * std::numbers::pi);
  EXPECT_NEAR(r.lhs, 0.0, 1e-12);
  EXPECT_NEAR(r.rhs, 0.0, 1e-12);
  EXPECT_NEAR(r.boundary, 0.0, 1e-12);
}

TEST(Hypervirial, HalfPeriodBoundaryStillVanishes) {
  // x x' = 0 at t = 0 and t = pi, so the n = 1 identity needs no boundary term.
  const auto traj = harmonic_cosine(2000, 1.0);
  const auto r = hypervirial_residual(traj, models::linear(), 1, 0.0, std::numbers::pi);
  EXPECT_NEAR(r.boundary, 0.0, 1e-12);
  EXPECT_NEAR(r.lhs, 0.5 * std::numbers::pi, 1e-12);
  EXPECT_NEAR(r.residual, 0.0, 1e-12);
}

TEST(Hypervirial, OffGridIntervalKeepsBoundaryTerm) {
  // On [0.3, 2.1] the boundary term is needed; the identity holds with it.
  const auto traj = harmonic_cosine(2000, 1.0);
  for (int n : {1, 2, 3, 4}) {
    const auto r = hypervirial_residual(traj, models::linear(), n, 0.3, 2.1);
    EXPECT_GT(std::abs(r.boundary), 1e-3);
    // Simpson truncation at dt = 2 pi / 2000 is a few 1e-11 for x^4
    EXPECT_NEAR(r.residual, 0.0, 1e-9) << n;
  }
}

TEST(Hypervirial, DuffingOnePeriod) {
  const ForceModel m = models::duffing();
  const double tau_lin = 2.0 * std::numbers::pi / frequency_chebyshev(m, 1.0).omega;
  const auto traj = integrate(m, 1.0, tau_lin / 2000, 3000);
  const double tau = period_from_trajectory(traj);
  const auto r = hypervirial_residual(traj, m, 1, 0.0, tau);
  EXPECT_LT(std::abs(r.residual) / r.lhs, 1e-6);
  // even orders vanish over a full period of a symmetric orbit
  const auto r2 = hypervirial_residual(traj, m, 2, 0.0, tau);
  EXPECT_LT(std::abs(r2.lhs), 1e-6);
  EXPECT_LT(std::abs(r2.rhs), 1e-6);
  const auto r3 = hypervirial_residual(traj, m, 3, 0.0, tau);
  EXPECT_GT(r3.lhs, 0.1);
  EXPECT_LT(std::abs(r3.residual) / r3.lhs, 1e-6);
}

TEST(Hypervirial, Errors) {
  const auto traj = harmonic_cosine(100, 1.0);
  EXPECT_THROW(hypervirial_residual(traj, models::linear(), 0, 0.0, 1.0), precondition_error);
  EXPECT_THROW(hypervirial_residual(traj, models::linear(), 1, -1.0, 1.0), precondition_error);
  EXPECT_THROW(hypervirial_residual(traj, models::linear(), 1, 0.0, 7.0), precondition_error);
  EXPECT_THROW(hypervirial_residual(traj, models::linear(), 1, 2.0, 1.0), precondition_error);
}

TEST(VirialCheck, HarmonicEquipartition) {
  const auto traj = integrate(models::linear(), 1.0, 2.0 * std::numbers::pi / 2000, 2500);
  const auto r = virial_check(traj, models::linear());
  EXPECT_NEAR(2.0 * r.kinetic_mean, 0.5, 1e-9);
  EXPECT_NEAR(r.virial_mean, 0.5, 1e-9);
  EXPECT_NEAR(r.residual, 0.0, 1e-8);
  EXPECT_NEAR(r.period, 2.0 * std::numbers::pi, 1e-8);
}

TEST(VirialCheck, CubicExactTrajectory) {
  const ForceModel m = models::cubic();
  const double tau_lin = 2.0 * std::numbers::pi / frequency_chebyshev(m, 1.0).omega;
  const auto traj = integrate(m, 1.0, tau_lin / 2000, 3000);
  const auto r = virial_check(traj, m);
  EXPECT_LT(std::abs(r.residual) / r.lhs, 1e-6);
}

TEST(VirialCheck, PeriodDetectionFailurePropagates) {
  const auto traj = harmonic_cosine(100, 0.6);
  EXPECT_THROW(virial_check(traj, models::linear()), numerical_error);
}

TEST(VirialCheck, CosineAnsatzAtVirialFrequency) {
  for (const auto& m : registered_models())
    for (double a : {0.5, 1.0, 2.0}) {
      const double omega = frequency_virial_cosine(m, a).omega;
      const auto r = virial_check(cosine_ansatz(a, omega, 2000), m);
      EXPECT_LT(std::abs(r.residual), 1e-10) << m.name << " A=" << a;
      if (m.name == "linear") continue;  // every omega is exact for the harmonic force only at omega = 1
      for (double shift : {0.99, 1.01}) {
        const auto off = virial_check(cosine_ansatz(a, omega * shift, 2000), m);
        EXPECT_GT(std::abs(off.residual), 1e-3 * off.lhs) << m.name << " A=" << a << " shift=" << shift;
      }
    }
}

TEST(VirialCheck, HarmonicAnsatzBreaksOffFrequency) {
  for (double shift : {0.99, 1.01}) {
    const auto off = virial_check(cosine_ansatz(1.0, shift, 2000), models::linear());
    EXPECT_GT(std::abs(off.residual), 1e-3 * off.lhs);
  }
}

class ResidualConvergence : public ::testing::TestWithParam<ForceModel> {};

TEST_P(ResidualConvergence, ShrinksWithStep) {
  const ForceModel& m = GetParam();
  double prev = n1_residual(m, 40);
  for (int steps : {80, 160, 320}) {
    const double cur = n1_residual(m, steps);
    // at least second order: a factor of 3.5 per halving
    EXPECT_GE(prev / cur, 3.5) << m.name << " steps=" << steps << " residuals " << prev << " -> " << cur;
    prev = cur;
  }
}

INSTANTIATE_TEST_SUITE_P(Registered, ResidualConvergence, ::testing::ValuesIn(registered_models()),
                         [](const auto& info) { return info.param.name; });
