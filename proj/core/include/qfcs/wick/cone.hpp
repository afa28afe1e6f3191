#pragma once

#include <vector>

#include "qfcs/bulk/causal_propagator.hpp"

namespace qfcs::wick {

// Minkowski double cone with tips at (t, r) = (-t_c, 0) and (t_c, 0). Its past boundary is
// the null cone t - r = -t_c, parametrized by V = t + r in [-t_c, t_c].
struct DoubleCone {
  double t_c;
};

// psi(V) = r (G f) on the past boundary, sampled at V_i = -t_c + i dV (spherically symmetric).
struct ConeTrace {
  double t_c = 0.0;
  double dv = 0.0;
  std::vector<double> v;
  std::vector<double> psi;
  bool tip_warning = false;  // the light cone of the support reaches the lower tip
};

ConeTrace pi_restriction(const bulk::RadialTestFunction& f, const DoubleCone& cone, std::size_t samples,
                         const bulk::PropagatorOptions& opt = {});

// 4 pi int (psi d_V psi' - psi' d_V psi) dV on the past boundary.
double sigma_cone(const ConeTrace& a, const ConeTrace& b);

}  // namespace qfcs::wick
