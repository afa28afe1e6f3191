#pragma once

#include <array>
#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "qfcs/bulk/test_function.hpp"
#include "qfcs/geometry/cosmology.hpp"
#include "qfcs/modes/potential.hpp"
#include "qfcs/modes/solver.hpp"

namespace qfcs::bulk {

using cd = std::complex<double>;

struct SpacetimePoint {
  double t;
  std::array<double, 3> x;
};

double spatial_distance(const SpacetimePoint& p, const SpacetimePoint& q);

// omega_2(x, x') with the time difference t - t' shifted to t - t' - i eps.
struct TwoPointKernel {
  std::string state;
  std::string spacetime;
  std::function<cd(const SpacetimePoint&, const SpacetimePoint&, double)> eval;

  cd operator()(const SpacetimePoint& p, const SpacetimePoint& q, double eps = 0.0) const {
    return eval(p, q, eps);
  }
};

TwoPointKernel minkowski_vacuum_2pt();
TwoPointKernel minkowski_thermal_2pt(double beta);
// Spacelike separations only (eps must be 0).
TwoPointKernel massive_minkowski_2pt(double mass);

// Rescaled mode family T_k(tau) on a conformally flat background with scale factor a.
struct ModeFamily {
  std::string name;
  std::function<double(double)> a;
  std::function<std::vector<cd>(double, const std::vector<double>&)> values;

  static ModeFamily minkowski();
  static ModeFamily de_sitter(double hubble, modes::NuParameter nu);
  // Numerical modes started in the asymptotic vacuum at tau0.
  static ModeFamily solved(const geometry::CosmologyModel& model, modes::ModePotential potential, double tau0,
                           modes::SolverOptions options = {});
};

struct KGridOptions {
  double k_max = 0.0;         // 0: chosen from eps (40/eps), capped at k_cap
  double k_cap = 2000.0;
  std::size_t panels = 0;     // 0: chosen from the oscillation cap
  std::size_t order = 8;
};

// Vacuum two-point function of the mode family; the flat part e^{-ik dt}/2k is summed in
// closed form and the remainder by panel quadrature with e^{-eps k} damping.
cd frw_two_point(const ModeFamily& modes, const SpacetimePoint& p, const SpacetimePoint& q, double eps,
                 const KGridOptions& opt = {});
cd frw_thermal_two_point(const ModeFamily& modes, double beta, const SpacetimePoint& p, const SpacetimePoint& q,
                         double eps, const KGridOptions& opt = {});

TwoPointKernel frw_vacuum_kernel(ModeFamily modes, KGridOptions opt = {});
TwoPointKernel frw_thermal_kernel(ModeFamily modes, double beta, KGridOptions opt = {});

// Mode transform B_f(k) = int dtau a^3 T_k(tau) f^(tau, k) on a fixed k-rule.
struct ModeTransform {
  std::vector<cd> b;
};

// Smeared quasi-free states built from a mode family on a fixed quadrature box.
class ModeSmearing {
 public:
  ModeSmearing(ModeFamily modes, SmearingBox box, double k_max = 16.0);

  ModeTransform transform(const RadialTestFunction& f) const;
  cd vacuum(const ModeTransform& f, const ModeTransform& fp) const;
  cd thermal(const ModeTransform& f, const ModeTransform& fp, double beta) const;

  cd vacuum(const RadialTestFunction& f, const RadialTestFunction& fp) const;
  cd thermal(const RadialTestFunction& f, const RadialTestFunction& fp, double beta) const;

  const SmearingBox& box() const { return box_; }
  const ModeFamily& modes() const { return modes_; }
  std::size_t k_nodes() const { return k_.size(); }

 private:
  ModeFamily modes_;
  SmearingBox box_;
  numeric::GaussRule t_rule_, r_rule_;
  std::vector<double> k_, kw_;
  std::vector<cd> time_weight_;     // [k][t]: w_t a^3 T_k
  std::vector<double> radial_weight_;  // [k][r]: w_r 4 pi r^2 sinc(k r)
};

}  // namespace qfcs::bulk
