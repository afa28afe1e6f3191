#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "qfcs/geometry/sphere.hpp"

namespace qfcs::boundary {

using cd = std::complex<double>;

// Uniform grid u_i = u0 + i du, i < n.
struct UGrid {
  double u0;
  double du;
  std::size_t n;

  double u(std::size_t i) const { return u0 + static_cast<double>(i) * du; }
  static UGrid centered(double half_width, std::size_t n);
  bool operator==(const UGrid&) const = default;
};

// Samples on a u-grid times a sphere quadrature grid, channel-major: value(s, i).
template <class T>
class GridFunction {
 public:
  using Sphere = std::shared_ptr<const geometry::SphereGrid>;

  GridFunction(UGrid grid, Sphere sphere, std::vector<T> values);

  static GridFunction sample(UGrid grid, Sphere sphere,
                             const std::function<T(double, const geometry::SpherePoint&)>& f);
  static GridFunction separable(UGrid grid, Sphere sphere, const std::function<T(double)>& g,
                                const std::function<T(const geometry::SpherePoint&)>& angular);

  const UGrid& grid() const { return grid_; }
  const geometry::SphereGrid& sphere() const { return *sphere_; }
  const Sphere& sphere_ptr() const { return sphere_; }
  std::size_t channels() const { return sphere_->size(); }
  std::span<const T> channel(std::size_t s) const {
    return {values_.data() + s * grid_.n, grid_.n};
  }
  const std::vector<T>& values() const { return values_; }

  // True when the outer 5% of u-samples on each side stay below 1e-12 of the peak.
  bool support_interior() const;

  GridFunction operator+(const GridFunction& o) const;
  GridFunction operator*(T scale) const;

 private:
  UGrid grid_;
  Sphere sphere_;
  std::vector<T> values_;
};

// Real boundary data on null infinity.
using BoundaryFunction = GridFunction<double>;
// Complex test functions on the horizon, U the affine parameter.
using HorizonFunction = GridFunction<cd>;

// Throws UsageError unless both live on the same u-grid and sphere grid.
template <class A, class B>
void require_same_grid(const GridFunction<A>& a, const GridFunction<B>& b);

// psi_hat(k, s) = int e^{iku} psi(u, s) du / sqrt(2 pi), sampled at the DFT frequencies.
struct SpectralDensity {
  double dk;
  std::vector<double> k;  // signed frequencies in transform order
  std::size_t channels;
  std::vector<cd> values;  // channel-major

  cd at(std::size_t s, std::size_t m) const { return values[s * k.size() + m]; }
  std::span<const cd> channel(std::size_t s) const { return {values.data() + s * k.size(), k.size()}; }
};

template <class T>
SpectralDensity fourier_u(const GridFunction<T>& psi, std::size_t padding = 1);

// Continuous transform at an arbitrary k by direct summation, one channel.
template <class T>
cd fourier_at(const GridFunction<T>& psi, std::size_t s, double k);

}  // namespace qfcs::boundary
