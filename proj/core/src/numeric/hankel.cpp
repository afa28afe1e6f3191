#include "qfcs/numeric/hankel.hpp"

#include <boost/math/special_functions/bessel.hpp>
#include <cmath>
#include <numbers>

#include "qfcs/error.hpp"
#include "qfcs/numeric/quadrature.hpp"

namespace qfcs::numeric {

namespace {

using cd = std::complex<double>;
constexpr double pi = std::numbers::pi;
constexpr double switch_point = 20.0;

cd schlafli(cd nu, double x) {
  // Vertical leg w = i theta, theta in [0, pi].
  static const GaussRule arc = composite_gauss(0.0, pi, 12, 16);
  cd arc_sum{};
  for (std::size_t i = 0; i < arc.size(); ++i) {
    const double th = arc.nodes[i];
    arc_sum += arc.weights[i] * std::exp(cd(0.0, 1.0) * (x * std::sin(th) - nu * th));
  }

  // Horizontal legs, truncated where exp(-x sinh t + |Re nu| t) < e^-45.
  const double growth = std::abs(nu.real()) + 1.0;
  double t_max = 1.0;
  for (int it = 0; it < 60; ++it) t_max = std::asinh((45.0 + growth * t_max) / x);
  const GaussRule legs = composite_gauss(0.0, t_max, 32, 16);
  const cd reflect = std::exp(cd(0.0, -pi) * nu);
  cd leg_sum{};
  for (std::size_t i = 0; i < legs.size(); ++i) {
    const double t = legs.nodes[i];
    leg_sum += legs.weights[i] * std::exp(-x * std::sinh(t)) *
               (std::exp(nu * t) + reflect * std::exp(-nu * t));
  }
  return (leg_sum + cd(0.0, 1.0) * arc_sum) / cd(0.0, pi);
}

cd asymptotic(cd nu, double x) {
  const cd mu = 4.0 * nu * nu;
  cd term = 1.0;
  cd sum = 1.0;
  double last = std::numeric_limits<double>::infinity();
  for (int k = 1; k < 60; ++k) {
    const double odd = 2.0 * k - 1.0;
    term *= cd(0.0, 1.0) * (mu - odd * odd) / (8.0 * k * x);
    const double mag = std::abs(term);
    if (mag > last) break;
    sum += term;
    if (mag < 1e-17 * std::abs(sum)) break;
    last = mag;
  }
  const cd phase = std::exp(cd(0.0, 1.0) * (x - nu * (pi / 2) - pi / 4));
  return std::sqrt(2.0 / (pi * x)) * phase * sum;
}

}  // namespace

cd hankel1(cd nu, double x) {
  if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("hankel1: argument must be positive");
  cd h;
  if (x >= switch_point)
    h = asymptotic(nu, x);
  else if (nu.imag() == 0.0)
    h = {boost::math::cyl_bessel_j(nu.real(), x), boost::math::cyl_neumann(nu.real(), x)};
  else
    h = schlafli(nu, x);
  if (!std::isfinite(h.real()) || !std::isfinite(h.imag()))
    throw NumericError("hankel1: non-finite value");
  return h;
}

HankelValue hankel1_with_derivative(cd nu, double x) {
  const cd h = hankel1(nu, x);
  const cd lower = hankel1(nu - 1.0, x);
  return {h, lower - nu / x * h};
}

}  // namespace qfcs::numeric
