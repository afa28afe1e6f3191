#pragma once

#include <functional>
#include <memory>

#include "qfcs/bulk/test_function.hpp"

namespace qfcs::bulk {

using Bilinear = std::function<double(const RadialTestFunction&, const RadialTestFunction&)>;

struct PropagatorOptions {
  double table_step = 0.01;     // grid step of the time-primitive table
  double panel_width = 0.25;    // outer and inner Gauss panels
  std::size_t order = 8;
};

class TimePrimitive;

// The solution (G f)(t, r) = ((G_adv - G_ret) f)(t, r) of the massless wave equation.
class CausalField {
 public:
  explicit CausalField(RadialTestFunction f, PropagatorOptions opt = {});
  double operator()(double t, double r) const;
  const RadialTestFunction& source() const { return f_; }

 private:
  RadialTestFunction f_;
  PropagatorOptions opt_;
  std::shared_ptr<const TimePrimitive> prim_;
};

// Smeared massless Minkowski causal propagator G = G_adv - G_ret for radial test functions.
double minkowski_causal_propagator(const RadialTestFunction& f, const RadialTestFunction& fp,
                                   const PropagatorOptions& opt = {});

// (f, f') -> G(omega^3 f, omega^3 f') with omega a positive function of time.
Bilinear conformal_green_rescale(Bilinear g, std::function<double(double)> omega);

struct LeapfrogOptions {
  double dr = 0.02;
  double cfl = 0.5;
  bool richardson = true;
};

// Causal propagator of d_t^2 - Laplacian + v(t) on flat radial data, from explicit
// retarded evolution of r psi.
double leapfrog_causal_propagator(const std::function<double(double)>& v, const RadialTestFunction& f,
                                  const RadialTestFunction& fp, const LeapfrogOptions& opt = {});

}  // namespace qfcs::bulk
