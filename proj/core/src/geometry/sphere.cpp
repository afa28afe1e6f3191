#include "qfcs/geometry/sphere.hpp"

#include <boost/math/special_functions/spherical_harmonic.hpp>
#include <cmath>
#include <numbers>

#include "qfcs/error.hpp"
#include "qfcs/numeric/quadrature.hpp"

namespace qfcs::geometry {

namespace {
constexpr double two_pi = 2 * std::numbers::pi;

double wrap_phi(double phi) {
  double w = std::fmod(phi, two_pi);
  if (w < 0) w += two_pi;
  if (w >= two_pi) w = 0.0;
  return w;
}
}  // namespace

std::array<double, 3> SpherePoint::cartesian() const {
  const double s = std::sin(theta);
  return {s * std::cos(phi), s * std::sin(phi), std::cos(theta)};
}

SpherePoint SpherePoint::from_cartesian(const std::array<double, 3>& v) {
  const double rho = std::hypot(v[0], v[1]);
  return {std::atan2(rho, v[2]), wrap_phi(std::atan2(v[1], v[0]))};
}

Stereographic stereographic(const SpherePoint& p) {
  if (p.theta == 0.0) return {{0.0, 0.0}, true};
  const double c = std::cos(p.theta / 2) / std::sin(p.theta / 2);
  return {std::polar(c, p.phi), false};
}

SpherePoint from_stereographic(const Stereographic& z) {
  if (z.infinite) return {0.0, 0.0};
  const double r = std::abs(z.zeta);
  return {2 * std::atan2(1.0, r), r == 0.0 ? 0.0 : wrap_phi(std::arg(z.zeta))};
}

std::array<std::complex<double>, 2> spinor(const SpherePoint& p) {
  return {std::polar(std::cos(p.theta / 2), p.phi), {std::sin(p.theta / 2), 0.0}};
}

SpherePoint from_spinor(const std::array<std::complex<double>, 2>& z) {
  const double a = std::abs(z[0]), b = std::abs(z[1]);
  const double theta = 2 * std::atan2(b, a);
  if (a == 0.0 || b == 0.0) return {theta, 0.0};
  return {theta, wrap_phi(std::arg(z[0] / z[1]))};
}

SphereGrid::SphereGrid(int l_max) : l_max_(l_max) {
  if (l_max < 0) throw DomainError("SphereGrid: l_max must be non-negative");
  const auto n_theta = static_cast<std::size_t>(2 * l_max + 2);
  const auto n_phi = static_cast<std::size_t>(4 * l_max + 4);
  const auto rule = numeric::gauss_legendre(n_theta);
  points_.reserve(n_theta * n_phi);
  weights_.reserve(n_theta * n_phi);
  for (std::size_t i = 0; i < n_theta; ++i) {
    const double theta = std::acos(-rule.nodes[i]);
    for (std::size_t j = 0; j < n_phi; ++j) {
      points_.push_back({theta, two_pi * static_cast<double>(j) / static_cast<double>(n_phi)});
      weights_.push_back(rule.weights[i] * two_pi / static_cast<double>(n_phi));
    }
  }
}

std::complex<double> spherical_harmonic(int l, int m, const SpherePoint& p) {
  if (l < 0 || std::abs(m) > l) return 0.0;
  return boost::math::spherical_harmonic(static_cast<unsigned>(l), m, p.theta, p.phi);
}

}  // namespace qfcs::geometry
