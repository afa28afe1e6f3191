#include "qfcs/modes/potential.hpp"

#include <cmath>
#include <limits>

#include "qfcs/error.hpp"

namespace qfcs::modes {

NuParameter nu_parameter(double m, double xi, double hubble) {
  if (hubble == 0.0) throw DomainError("nu_parameter: H must be nonzero");
  const double arg = 9.0 / 4.0 - (m * m / (hubble * hubble) + 12.0 * xi);
  if (arg >= 0) return {{std::sqrt(arg), 0.0}};
  return {{0.0, std::sqrt(-arg)}};
}

namespace {
double ds_coefficient(NuParameter nu) {
  return (0.25 - nu.value * nu.value).real();
}
}  // namespace

ModePotential ModePotential::from_model(const geometry::CosmologyModel& model, double m,
                                        double xi) {
  if (model.kind() == geometry::CosmologyKind::deSitter)
    return de_sitter(nu_parameter(m, xi, model.hubble()));
  ModePotential p;
  p.full_ = [model, m, xi](double tau) {
    const double a = model.a(tau);
    return a * a * (m * m + (xi - 1.0 / 6.0) * model.ricci(tau));
  };
  p.domain_ = model.domain();
  return p;
}

ModePotential ModePotential::de_sitter(NuParameter nu) {
  ModePotential p;
  const double c = ds_coefficient(nu);
  p.full_ = [c](double tau) { return c / (tau * tau); };
  p.nu_ = nu;
  p.decay_ = std::numeric_limits<double>::infinity();
  p.domain_ = {-std::numeric_limits<double>::infinity(), 0.0};
  return p;
}

ModePotential ModePotential::perturbed_de_sitter(NuParameter nu,
                                                 std::function<double(double)> delta,
                                                 double decay_exponent) {
  ModePotential p;
  const double c = ds_coefficient(nu);
  p.full_ = [c, delta](double tau) { return c / (tau * tau) + delta(tau); };
  p.delta_ = std::move(delta);
  p.nu_ = nu;
  p.decay_ = decay_exponent;
  p.domain_ = {-std::numeric_limits<double>::infinity(), 0.0};
  return p;
}

ModePotential ModePotential::custom(std::function<double(double)> v, geometry::Interval domain) {
  ModePotential p;
  p.full_ = std::move(v);
  p.domain_ = domain;
  return p;
}

double ModePotential::operator()(double tau) const {
  if (!(tau > domain_.lo && tau < domain_.hi) &&
      !(tau >= domain_.lo && tau <= domain_.hi && std::isfinite(domain_.lo) &&
        std::isfinite(domain_.hi)))
    throw DomainError("potential evaluated outside its domain");
  return full_(tau);
}

double ModePotential::delta(double tau) const {
  if (!nu_) return (*this)(tau);
  return delta_ ? delta_(tau) : 0.0;
}

}  // namespace qfcs::modes
