#include "qfcs/symmetry/lorentz.hpp"

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>
#include <algorithm>
#include <cmath>

#include "qfcs/error.hpp"

namespace qfcs::symmetry {

LorentzElement::LorentzElement(cd a, cd b, cd c, cd d) : m_{a, b, c, d} {
  if (std::abs(a * d - b * c - 1.0) >= 1e-12)
    throw DomainError("LorentzElement: determinant differs from 1");
}

LorentzElement LorentzElement::rotation(const std::array<double, 3>& axis, double angle) {
  const double n = std::sqrt(axis[0] * axis[0] + axis[1] * axis[1] + axis[2] * axis[2]);
  if (!(n > 0)) throw DomainError("rotation: zero axis");
  const double x = axis[0] / n, y = axis[1] / n, z = axis[2] / n;
  const double c = std::cos(angle / 2), s = std::sin(angle / 2);
  // exp(-i angle/2 n.sigma)
  return {cd(c, -s * z), cd(-s * y, -s * x), cd(s * y, -s * x), cd(c, s * z)};
}

LorentzElement LorentzElement::boost_z(double rapidity) {
  return {std::exp(rapidity / 2), 0.0, 0.0, std::exp(-rapidity / 2)};
}

namespace {
LorentzElement from_matrix(const Eigen::Matrix2cd& m) {
  // Renormalize the determinant lost to rounding.
  const cd s = std::sqrt(m.determinant());
  return {m(0, 0) / s, m(0, 1) / s, m(1, 0) / s, m(1, 1) / s};
}
}  // namespace

LorentzElement LorentzElement::random(harness::CounterRng& rng, double scale) {
  Eigen::Matrix2cd x;
  const cd p(rng.normal(), rng.normal());
  x << p, cd(rng.normal(), rng.normal()), cd(rng.normal(), rng.normal()), -p;
  x *= scale;
  return from_matrix(x.exp());
}

LorentzElement LorentzElement::random_rotation(harness::CounterRng& rng) {
  const std::array<double, 3> axis{rng.normal(), rng.normal(), rng.normal()};
  return rotation(axis, rng.uniform(0.0, 2 * std::numbers::pi));
}

LorentzElement LorentzElement::operator*(const LorentzElement& o) const {
  const auto& p = m_;
  const auto& q = o.m_;
  return from_matrix((Eigen::Matrix2cd() << p[0] * q[0] + p[1] * q[2], p[0] * q[1] + p[1] * q[3],
                      p[2] * q[0] + p[3] * q[2], p[2] * q[1] + p[3] * q[3])
                         .finished());
}

bool LorentzElement::is_rotation(double tol) const {
  // Unitary SL(2, C): d = conj(a), c = -conj(b).
  return std::abs(m_[3] - std::conj(m_[0])) < tol && std::abs(m_[2] + std::conj(m_[1])) < tol;
}

double LorentzElement::distance(const LorentzElement& o) const {
  double plus = 0.0, minus = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    plus = std::max(plus, std::abs(m_[i] - o.m_[i]));
    minus = std::max(minus, std::abs(m_[i] + o.m_[i]));
  }
  return std::min(plus, minus);
}

geometry::SpherePoint LorentzElement::act(const geometry::SpherePoint& p) const {
  const auto z = geometry::spinor(p);
  return geometry::from_spinor({m_[0] * z[0] + m_[1] * z[1], m_[2] * z[0] + m_[3] * z[1]});
}

geometry::Stereographic LorentzElement::act(const geometry::Stereographic& z) const {
  if (z.infinite) {
    if (m_[2] == 0.0) return {0.0, true};
    return {m_[0] / m_[2], false};
  }
  const cd den = m_[2] * z.zeta + m_[3];
  if (den == 0.0) return {0.0, true};
  return {(m_[0] * z.zeta + m_[1]) / den, false};
}

double k_factor(const LorentzElement& lambda, const geometry::SpherePoint& p) {
  const auto z = geometry::spinor(p);  // unit norm
  return 1.0 / (std::norm(lambda.a() * z[0] + lambda.b() * z[1]) +
                std::norm(lambda.c() * z[0] + lambda.d() * z[1]));
}

}  // namespace qfcs::symmetry
