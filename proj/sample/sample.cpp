// Three facilities on a 20-unit road with two houses nearby.

#include <cstdio>

#include "cofl/cofl.hpp"

int main() {
  cofl::Instance inst;
  inst.p = {0.0, 0.0};
  inst.q = {20.0, 0.0};
  inst.k = 3;
  inst.points = {{6.0, 2.0}, {13.0, 1.5}};

  const cofl::OptimalResult exact = cofl::solve_exact(inst);
  const cofl::OptimalResult param = cofl::solve_parametric(inst);
  std::printf("exact      r = %.12g (%ld decision calls, %ld candidates)\n", exact.r_max,
              exact.stats.decision_calls, exact.stats.candidates);
  std::printf("parametric r = %.12g (%ld decision calls)\n", param.r_max, param.stats.decision_calls);
  std::printf("centers:");
  for (double c : exact.packing.centers) std::printf(" %.6g", c);
  std::printf("\n");
  return 0;
}
