#pragma once

#include <variant>
#include <vector>

#include "qfcs/modes/mode_function.hpp"
#include "qfcs/modes/potential.hpp"

namespace qfcs::modes {

// Vacuum-like data imposed at finite tau0: the exact de Sitter mode when the potential
// has a de Sitter reference, otherwise the first-order WKB solution with the phase
// integral from -infinity.
struct AsymptoticVacuum {
  double tau0;
};

struct ExplicitData {
  double tau0;
  cd chi0;
  cd dchi0;
};

using ModeInit = std::variant<AsymptoticVacuum, ExplicitData>;

struct SolverOptions {
  double rtol = 1e-10;
  int stages = 6;  // Gauss-Legendre collocation, order 2 * stages
};

// Integrates chi'' + (k^2 + V) chi = 0 from tau0 through the ascending grid. The Gauss
// collocation step preserves the Wronskian up to rounding.
ModeFunction solve_mode(const ModePotential& potential, double k, const std::vector<double>& grid,
                        const ModeInit& init, const SolverOptions& options = {});

}  // namespace qfcs::modes
