#pragma once

#include <complex>
#include <functional>
#include <optional>

#include "qfcs/geometry/cosmology.hpp"

namespace qfcs::modes {

struct NuParameter {
  std::complex<double> value;
};

// nu = sqrt(9/4 - (m^2/H^2 + 12 xi)) on the branch Re nu >= 0, Im nu >= 0.
NuParameter nu_parameter(double m, double xi, double hubble);

// Potential V(tau) of chi'' + (k^2 + V) chi = 0, optionally split as
// V = (1/4 - nu^2)/tau^2 + dV with a declared decay exponent for dV.
class ModePotential {
 public:
  // V = a^2 (m^2 + (xi - 1/6) R). A de Sitter model gets the de Sitter reference.
  static ModePotential from_model(const geometry::CosmologyModel& model, double m, double xi);
  static ModePotential de_sitter(NuParameter nu);
  static ModePotential perturbed_de_sitter(NuParameter nu, std::function<double(double)> delta,
                                           double decay_exponent);
  static ModePotential custom(std::function<double(double)> v, geometry::Interval domain);

  double operator()(double tau) const;
  double delta(double tau) const;

  const geometry::Interval& domain() const { return domain_; }
  const std::optional<NuParameter>& reference() const { return nu_; }
  // dV = O(|tau|^-p) as tau -> -inf; +inf when dV vanishes identically.
  double decay_exponent() const { return decay_; }
  bool delta_is_zero() const { return !delta_; }

 private:
  std::function<double(double)> full_;
  std::function<double(double)> delta_;
  std::optional<NuParameter> nu_;
  double decay_ = 0.0;
  geometry::Interval domain_;
};

}  // namespace qfcs::modes
