// A trial family with no closed form: u = A x (1 - x) (1 + x (1 - x)).
// The virial route still gives lambda(A) and a fold estimate by quadrature.

#include <cstdio>

#include "nlvirial/bratu.hpp"

int main() {
  using namespace nlvirial::bratu;
  TrialFamily quartic{
      "quartic",
      [](double a, double x) {
        const double q = x * (1.0 - x);
        return a * q * (1.0 + q);
      },
      [](double a, double x) {
        const double q = x * (1.0 - x);
        return a * (1.0 - 2.0 * x) * (1.0 + 2.0 * q);
      },
      [](double a) { return a; },
      {},
      Family::custom};

  const CriticalPoint trial = trial_critical_point(quartic);
  const CriticalPoint exact = critical_theta();
  std::printf("quartic trial: A_c = %.9f  lambda_c = %.9f  u'(0)_c = %.9f\n", trial.param_c, trial.lambda_c,
              trial.slope0_c);
  std::printf("exact:         theta_c = %.9f  lambda_c = %.9f  u'(0)_c = %.9f\n", exact.param_c, exact.lambda_c,
              exact.slope0_c);
}
