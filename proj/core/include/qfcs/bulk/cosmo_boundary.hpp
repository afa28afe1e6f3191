#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "qfcs/boundary/boundary_function.hpp"
#include "qfcs/geometry/cosmology.hpp"

namespace qfcs::bulk {

struct CosmoLimitOptions {
  double tau_far = -1e4;   // far end of the monitored decade
  double tolerance = 1e-7;  // Cauchy criterion, relative
};

struct CosmoBoundaryProfile {
  boundary::UGrid grid;
  std::vector<std::complex<double>> values;
  double hubble;         // read off from a(tau) |tau| -> 1/H
  std::complex<double> amplitude;  // lim e^{ik tau} chi(tau)
};

// Boundary profile on the past cosmological horizon of a rescaled plane-wave mode chi_k.
// Throws LimitError when a(tau) |tau| or e^{ik tau} chi(tau) fails to settle over the last
// decade of conformal time.
CosmoBoundaryProfile gamma_cosmo(const std::function<std::complex<double>(double)>& chi, double k,
                                 const geometry::CosmologyModel& model, boundary::UGrid grid,
                                 const CosmoLimitOptions& opt = {});

}  // namespace qfcs::bulk
