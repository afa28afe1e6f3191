#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace qfcs::geometry {

struct SpherePoint {
  double theta;  // polar angle in [0, pi]
  double phi;    // azimuth in [0, 2 pi)

  std::array<double, 3> cartesian() const;
  static SpherePoint from_cartesian(const std::array<double, 3>& v);
};

// Point of the Riemann sphere; `infinite` marks zeta = infinity (theta = 0).
struct Stereographic {
  std::complex<double> zeta;
  bool infinite = false;
};

// zeta = e^{i phi} cot(theta/2).
Stereographic stereographic(const SpherePoint& p);
SpherePoint from_stereographic(const Stereographic& z);

// Homogeneous coordinates (z1, z2) with zeta = z1/z2 and |z1|^2 + |z2|^2 = 1.
std::array<std::complex<double>, 2> spinor(const SpherePoint& p);
SpherePoint from_spinor(const std::array<std::complex<double>, 2>& z);

// Gauss-Legendre in cos(theta) times a uniform azimuthal grid. Integrates products of
// spherical harmonics with l, l' <= l_max exactly.
class SphereGrid {
 public:
  explicit SphereGrid(int l_max);

  int l_max() const { return l_max_; }
  std::size_t size() const { return points_.size(); }
  const std::vector<SpherePoint>& points() const { return points_; }
  const std::vector<double>& weights() const { return weights_; }

  template <class F>
  auto integrate(F&& f) const {
    decltype(f(points_[0])) sum{};
    for (std::size_t i = 0; i < points_.size(); ++i) sum += weights_[i] * f(points_[i]);
    return sum;
  }

 private:
  int l_max_;
  std::vector<SpherePoint> points_;
  std::vector<double> weights_;
};

// Orthonormal complex spherical harmonic Y_lm(theta, phi) (Condon-Shortley phase).
std::complex<double> spherical_harmonic(int l, int m, const SpherePoint& p);

}  // namespace qfcs::geometry
