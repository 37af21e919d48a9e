// SPDX-License-Identifier: Apache-2.0
// Prints the Mott cross section of two identical spinless particles next to
// its non-relativistic limit for a few relative momenta.
#include <cstdio>

#include "scatter/scatter.hpp"

int main() {
  const double alpha = 1.0 / 137.035999;
  const double mass = 1.0;
  for (double k : {0.01, 0.1, 1.0}) {
    const auto rel = scatter::relative_velocity(k, mass);
    std::printf("k = %g  v = %.6f  tau = %.6f\n", k, rel.v, scatter::coulomb_tau(alpha, mass, k));
    for (double deg : {30.0, 60.0, 90.0}) {
      const double theta = deg * scatter::kDegree;
      std::printf("  theta = %5.1f  mott = %.6e  non-relativistic = %.6e\n", deg,
                  scatter::mott_cross_section(alpha, mass, k, theta),
                  scatter::mott_cross_section_nonrelativistic(alpha, mass, rel.v, theta));
    }
  }
}
