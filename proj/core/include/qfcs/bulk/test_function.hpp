#pragma once

#include <functional>
#include <vector>

#include "qfcs/harness/rng.hpp"
#include "qfcs/numeric/quadrature.hpp"

namespace qfcs::bulk {

// Spherically symmetric test function f(t, r) supported in [t_lo, t_hi] x [0, r_hi].
// t is Minkowski time or conformal time depending on context.
struct RadialTestFunction {
  std::function<double(double, double)> f;
  double t_lo;
  double t_hi;
  double r_hi;

  double operator()(double t, double r) const { return f(t, r); }

  // A exp(-((t - tc)^2 + (r - rc)^2) / (2 w^2)), support cut at 8 w. rc = 0 gives a
  // centered bump, otherwise rc >= 8 w keeps the shell away from the origin.
  static RadialTestFunction gaussian(double amplitude, double tc, double rc, double width);
  // Pointwise product with a function of time (used for conformal weights).
  RadialTestFunction times(std::function<double(double)> weight) const;
  RadialTestFunction scaled(double s) const;
};

// Region [t_lo, t_hi] x [0, r_hi] holding the supports of a family of test functions.
struct SmearingBox {
  double t_lo;
  double t_hi;
  double r_hi;

  bool contains(const RadialTestFunction& f) const;
};

// Gaussian bump with random centre and width fully inside the box.
RadialTestFunction random_test_function(harness::CounterRng& rng, const SmearingBox& box,
                                        double min_width = 0.25, double max_width = 0.45);

}  // namespace qfcs::bulk
