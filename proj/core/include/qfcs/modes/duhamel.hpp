#pragma once

#include <vector>

#include "qfcs/modes/mode_function.hpp"
#include "qfcs/modes/potential.hpp"

namespace qfcs::modes {

struct DuhamelOptions {
  double points_per_wavelength = 64;
  double tail_tolerance = 1e-9;  // bound on the neglected |dV| mass below the start
};

// Partial sum of chi = sum_n chi_n with chi_0 the de Sitter mode and
// chi_{n+1}(tau) = int_{-inf}^tau K(tau, s) (-dV(s)) chi_n(s) ds,
// K(tau, s) = -2 Im(chi_0(tau) conj(chi_0(s))). Per-order sup norms of chi_n on the
// grid are returned in order_norms.
ModeFunction duhamel_series(const ModePotential& potential, NuParameter nu, double k,
                            const std::vector<double>& grid, int order,
                            const DuhamelOptions& options = {});

}  // namespace qfcs::modes
