#pragma once

#include "qfcs/boundary/boundary_function.hpp"

namespace qfcs::boundary {

// int (psi d_u psi' - psi' d_u psi) du dmu_S2, eighth-order differences.
double sigma_boundary(const BoundaryFunction& psi, const BoundaryFunction& psi_prime);

// sum_s w_s int_0^inf 2k conj(a_hat) b_hat dk on the Fourier side. The half-line
// k-sum of the (zero-padded) transform carries Euler-Maclaurin end corrections built
// from exact moments of a and b.
cd positive_frequency_pairing(const HorizonFunction& a, const HorizonFunction& b);
cd positive_frequency_pairing(const BoundaryFunction& a, const BoundaryFunction& b);

// Re of the pairing: the vacuum one-particle scalar product.
double mu_vacuum(const BoundaryFunction& psi, const BoundaryFunction& psi_prime);

// Spectral weight 2k / (1 - e^{-beta k}), with the k -> 0 value 2/beta.
double thermal_weight(double k, double beta);

// Re int_R thermal_weight(k) conj(psi_hat) psi_hat' dk dmu_S2.
double mu_thermal(const BoundaryFunction& psi, const BoundaryFunction& psi_prime, double beta);

// mu_vacuum + (i/2) sigma_boundary.
cd boundary_two_point(const BoundaryFunction& psi, const BoundaryFunction& psi_prime);

HorizonFunction complexify(const BoundaryFunction& psi);
HorizonFunction conjugate(const HorizonFunction& f);

}  // namespace qfcs::boundary
