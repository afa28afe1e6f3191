#pragma once

#include <vector>

#include "qfcs/boundary/boundary_function.hpp"

namespace qfcs::boundary {

struct KernelLadder {
  std::vector<double> eps;
  std::vector<cd> values;
  cd extrapolated;
};

// -(1/pi) lim_{eps -> 0} int a(u, s) b(u', s) / (u - u' - i eps)^2 du du' dmu_S2.
// b is interpolated by local cubics and integrated exactly against the kernel for
// eps = du, du/2, du/4; the ladder is Richardson-extrapolated to eps = 0.
KernelLadder smear_vacuum_kernel(const HorizonFunction& a, const HorizonFunction& b);
KernelLadder smear_vacuum_kernel(const BoundaryFunction& a, const BoundaryFunction& b);

// Convolution weights W_o with int K_eps(u_i - u') b(u') du' = sum_m W_{i-m} b_m,
// indexed o + (n - 1) for o in (-n, n).
std::vector<cd> kernel_weights(double du, double eps, std::size_t n);

}  // namespace qfcs::boundary
