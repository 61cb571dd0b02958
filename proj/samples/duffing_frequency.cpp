// Compare the first-Chebyshev-term frequency of the Duffing oscillator
// x'' + x + eps x^3 = 0 with the exact frequency from the period integral.

#include <cmath>
#include <cstdio>
#include <numbers>

#include "nlvirial/linearize.hpp"

int main() {
  const nlvirial::ForceModel model = nlvirial::models::duffing(1.0);
  std::printf("%8s %14s %14s %14s\n", "A", "omega_lin", "omega_exact", "rel_err");
  for (double a : {0.1, 0.5, 1.0, 2.0, 5.0, 10.0}) {
    const double lin = nlvirial::frequency_chebyshev(model, a).omega;
    const double exact = nlvirial::frequency_exact(model, a).omega;
    std::printf("%8.3f %14.10f %14.10f %14.3e\n", a, lin, exact, std::abs(lin - exact) / exact);
  }
}
