#pragma once

#include <functional>
#include <vector>

#include "qfcs/boundary/boundary_function.hpp"

namespace qfcs::bulk {

// Radial Cauchy data stored as w = r phi and v = r pi on r_j = j h, j = 0..n-1.
struct RadialCauchyData {
  double h = 0.0;
  std::vector<double> w;
  std::vector<double> v;

  static RadialCauchyData sample(const std::function<double(double)>& phi, const std::function<double(double)>& pi,
                                 double r_max, double h);
  double r_max() const { return h * static_cast<double>(w.size() - 1); }
};

// int (phi pi' - phi' pi) d^3x on the slice.
double sigma_bulk(const RadialCauchyData& a, const RadialCauchyData& b);

// Massless free evolution by time t (d'Alembert on the odd extension of r phi). The
// result lives on the same grid; the grid must contain the evolved support.
RadialCauchyData evolve_free(const RadialCauchyData& data, double t);

// phi(t, r) = (g(t - r) - g(t + r)) / r.
struct SphericalWave {
  std::function<double(double)> g;
  std::function<double(double)> dg;

  double field(double t, double r) const;
  double momentum(double t, double r) const;
  RadialCauchyData cauchy_data(double t, double r_max, double h) const;
};

// Boundary value lim (v/2) phi at fixed u = t - r, from v = 1e2, 3e2, 1e3 extrapolated
// quadratically in 1/v.
double gamma_scri_value(const SphericalWave& wave, double u);
boundary::BoundaryFunction gamma_scri_minkowski(const SphericalWave& wave, boundary::UGrid grid,
                                                boundary::BoundaryFunction::Sphere sphere);

}  // namespace qfcs::bulk
