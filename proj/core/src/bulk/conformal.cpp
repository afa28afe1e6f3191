#include "qfcs/bulk/conformal.hpp"

#include "qfcs/error.hpp"
#include "qfcs/numeric/finite_difference.hpp"

namespace qfcs::bulk {

namespace {

double laplacian(const RadialField& h, double tau, double r, double step) {
  if (!(r > 4 * step)) throw DomainError("radial Laplacian: r must exceed the stencil half-width");
  auto radial = [&](double x) { return h(tau, x); };
  return numeric::central_second_derivative(radial, r, step) + 2 / r * numeric::central_derivative(radial, r, step);
}

}  // namespace

double flat_wave_operator(const RadialField& h, double tau, double r, double step) {
  auto temporal = [&](double t) { return h(t, r); };
  return -numeric::central_second_derivative(temporal, tau, step) + laplacian(h, tau, r, step);
}

double frw_conformal_operator(const geometry::CosmologyModel& model, const RadialField& phi, double tau, double r,
                              double step) {
  const double a = model.a(tau), da = model.a_prime(tau);
  if (!(a > 0)) throw DomainError("frw_conformal_operator: scale factor must be positive");
  auto temporal = [&](double t) { return phi(t, r); };
  const double dt = numeric::central_derivative(temporal, tau, step);
  const double dtt = numeric::central_second_derivative(temporal, tau, step);
  const double box = (-(2 * a * da * dt + a * a * dtt) + a * a * laplacian(phi, tau, r, step)) / (a * a * a * a);
  return box - model.ricci(tau) / 6 * phi(tau, r);
}

}  // namespace qfcs::bulk
