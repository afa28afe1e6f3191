#pragma once

#include <array>
#include <complex>

#include "qfcs/geometry/sphere.hpp"
#include "qfcs/harness/rng.hpp"

namespace qfcs::symmetry {

using cd = std::complex<double>;

// SL(2, C) matrix (a b; c d) acting on the Riemann sphere by Mobius maps. The element
// and its negative represent the same Lorentz transformation.
class LorentzElement {
 public:
  LorentzElement() : LorentzElement(1.0, 0.0, 0.0, 1.0) {}
  LorentzElement(cd a, cd b, cd c, cd d);  // throws DomainError if |det - 1| >= 1e-12

  static LorentzElement identity() { return {}; }
  // Rotation by `angle` about the unit axis n, as an SU(2) matrix.
  static LorentzElement rotation(const std::array<double, 3>& axis, double angle);
  static LorentzElement boost_z(double rapidity);
  // exp of a random sl(2, C) element with entries of size ~scale.
  static LorentzElement random(harness::CounterRng& rng, double scale = 0.5);
  static LorentzElement random_rotation(harness::CounterRng& rng);

  cd a() const { return m_[0]; }
  cd b() const { return m_[1]; }
  cd c() const { return m_[2]; }
  cd d() const { return m_[3]; }

  LorentzElement operator*(const LorentzElement& o) const;
  LorentzElement inverse() const { return {m_[3], -m_[1], -m_[2], m_[0]}; }
  bool is_rotation(double tol = 1e-12) const;
  // Max entry distance, minimized over the overall sign.
  double distance(const LorentzElement& o) const;

  geometry::SpherePoint act(const geometry::SpherePoint& p) const;
  // zeta -> (a zeta + b) / (c zeta + d) on the Riemann sphere.
  geometry::Stereographic act(const geometry::Stereographic& z) const;

 private:
  std::array<cd, 4> m_;
};

// K_Lambda = (1 + |zeta|^2) / (|a zeta + b|^2 + |c zeta + d|^2), with the projective
// limit at zeta = infinity.
double k_factor(const LorentzElement& lambda, const geometry::SpherePoint& p);

}  // namespace qfcs::symmetry
