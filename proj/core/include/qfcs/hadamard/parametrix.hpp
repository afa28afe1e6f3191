#pragma once

#include <array>
#include <complex>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "qfcs/bulk/two_point.hpp"

namespace qfcs::hadamard {

using bulk::SpacetimePoint;
using cd = std::complex<double>;

// Halved squared Minkowski distance (-dt^2 + |dx|^2) / 2.
double sigma_geodesic_minkowski(const SpacetimePoint& x, const SpacetimePoint& y);

// (1/8 pi^2) w(x) w(y) [U / sigma_eps + V log(sigma_eps / lambda^2)] with
// sigma_eps = sigma + i eps (T(x) - T(y)) + eps^2 / 2 and T the chart time.
struct HadamardParametrix {
  std::string name;
  std::function<double(const SpacetimePoint&, const SpacetimePoint&)> sigma;
  std::function<double(const SpacetimePoint&, const SpacetimePoint&)> u;
  std::function<double(const SpacetimePoint&, const SpacetimePoint&)> v;
  std::function<double(double)> weight;  // conformal weight, a function of chart time
  double lambda = 1.0;
  int v_order = 0;

  static HadamardParametrix minkowski_massless();
  // Order-0 truncation: V is dropped entirely (the massive log term is left in the residual).
  static HadamardParametrix minkowski_truncated();
  // Flat parametrix divided by a(t) a(t') for a conformally flat metric a^2 eta.
  static HadamardParametrix conformally_rescaled(std::function<double(double)> scale_factor);
};

cd sigma_eps(const HadamardParametrix& par, const SpacetimePoint& x, const SpacetimePoint& y, double eps);
cd parametrix_eval(const HadamardParametrix& par, const SpacetimePoint& x, const SpacetimePoint& y, double eps);

struct ProbeWindow {
  SpacetimePoint base{0.0, {0.0, 0.0, 0.0}};
  std::array<double, 3> direction{1.0, 0.0, 0.0};
  double r0 = 0.5;
  std::size_t levels = 14;  // r_j = r0 2^-j, j < levels
  double eps = 0.0;
  double relative_floor = 1e-10;  // |D| below this fraction of |H| counts as zero
};

struct HadamardReport {
  std::string state;
  std::string parametrix;
  double lambda = 1.0;
  std::vector<double> separations;
  std::vector<double> residuals;  // |omega_2 - H|
  std::vector<double> parametrix_values;  // |H|
  double max_residual = 0.0;
  double growth_exponent = 0.0;  // least-squares slope of log|D| against log r
  double max_log_ratio = 0.0;    // max |D| / log(1/r) over r < 1
};

HadamardReport hadamard_difference(const bulk::TwoPointKernel& state, const HadamardParametrix& par,
                                   const ProbeWindow& probe = {});

}  // namespace qfcs::hadamard
