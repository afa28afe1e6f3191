#pragma once

#include <span>
#include <vector>

#include "qfcs/boundary/boundary_function.hpp"
#include "qfcs/boundary/kernel_smearing.hpp"

namespace qfcs::boundary {

// rho(k) = 8 M^2 k e^{4 pi M k} / (e^{4 pi M k} - e^{-4 pi M k}), rho(0) = M / pi.
double horizon_thermal_density(double mass, double k);

// -(4M^2/pi) lim int f(U, s) conj(f'(U', s)) / (U - U' - i eps)^2 dU dU' dmu_S2,
// from the extrapolated eps ladder.
cd horizon_inner_product(const HorizonFunction& f, const HorizonFunction& f_prime, double mass);
KernelLadder horizon_inner_product_ladder(const HorizonFunction& f, const HorizonFunction& f_prime,
                                          double mass);
// Fourier side: 4M^2 int_0^inf 2K f_hat(-K) conj(f'_hat(-K)) dK dmu_S2.
cd horizon_inner_product_fourier(const HorizonFunction& f, const HorizonFunction& f_prime,
                                 double mass);

struct KmsReport {
  double beta;
  double max_deviation;  // max_k |w(k) / (w(-k) e^{beta k}) - 1| over k > 0
  bool kms;              // false when some w(-k) = 0 with w(k) != 0
  std::size_t grid_size;
};

// Detailed balance on a grid symmetric about 0 (k_i = -k_{n-1-i}).
KmsReport kms_check(std::span<const double> k, std::span<const double> w, double beta);

// 2 k Theta(k): the vacuum spectral weight.
double vacuum_weight(double k);

}  // namespace qfcs::boundary
