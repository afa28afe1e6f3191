#include "qfcs/boundary/boundary_function.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qfcs/error.hpp"
#include "qfcs/numeric/fft.hpp"

namespace qfcs::boundary {

UGrid UGrid::centered(double half_width, std::size_t n) {
  if (n < 2) throw DomainError("UGrid: need at least two points");
  return {-half_width, 2 * half_width / static_cast<double>(n - 1), n};
}

template <class T>
GridFunction<T>::GridFunction(UGrid grid, Sphere sphere, std::vector<T> values)
    : grid_(grid), sphere_(std::move(sphere)), values_(std::move(values)) {
  if (!sphere_) throw DomainError("GridFunction: missing sphere grid");
  if (values_.size() != grid_.n * sphere_->size())
    throw DomainError("GridFunction: value count does not match grid");
}

template <class T>
GridFunction<T> GridFunction<T>::sample(
    UGrid grid, Sphere sphere, const std::function<T(double, const geometry::SpherePoint&)>& f) {
  std::vector<T> v;
  v.reserve(grid.n * sphere->size());
  for (const auto& p : sphere->points())
    for (std::size_t i = 0; i < grid.n; ++i) v.push_back(f(grid.u(i), p));
  return GridFunction(grid, std::move(sphere), std::move(v));
}

template <class T>
GridFunction<T> GridFunction<T>::separable(
    UGrid grid, Sphere sphere, const std::function<T(double)>& g,
    const std::function<T(const geometry::SpherePoint&)>& angular) {
  std::vector<T> radial(grid.n);
  for (std::size_t i = 0; i < grid.n; ++i) radial[i] = g(grid.u(i));
  std::vector<T> v;
  v.reserve(grid.n * sphere->size());
  for (const auto& p : sphere->points()) {
    const T a = angular(p);
    for (std::size_t i = 0; i < grid.n; ++i) v.push_back(a * radial[i]);
  }
  return GridFunction(grid, std::move(sphere), std::move(v));
}

template <class T>
bool GridFunction<T>::support_interior() const {
  double peak = 0.0;
  for (const T& x : values_) peak = std::max(peak, std::abs(x));
  if (peak == 0.0) return true;
  const std::size_t edge = std::max<std::size_t>(1, grid_.n / 20);
  for (std::size_t s = 0; s < channels(); ++s) {
    const auto c = channel(s);
    for (std::size_t i = 0; i < edge; ++i)
      if (std::abs(c[i]) > 1e-12 * peak || std::abs(c[grid_.n - 1 - i]) > 1e-12 * peak) return false;
  }
  return true;
}

template <class T>
GridFunction<T> GridFunction<T>::operator+(const GridFunction& o) const {
  require_same_grid(*this, o);
  std::vector<T> v(values_);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] += o.values_[i];
  return GridFunction(grid_, sphere_, std::move(v));
}

template <class T>
GridFunction<T> GridFunction<T>::operator*(T scale) const {
  std::vector<T> v(values_);
  for (auto& x : v) x *= scale;
  return GridFunction(grid_, sphere_, std::move(v));
}

template <class A, class B>
void require_same_grid(const GridFunction<A>& a, const GridFunction<B>& b) {
  if (!(a.grid() == b.grid()) || a.sphere().l_max() != b.sphere().l_max() ||
      a.channels() != b.channels())
    throw UsageError("boundary functions live on different grids");
}

template <class T>
SpectralDensity fourier_u(const GridFunction<T>& psi, std::size_t padding) {
  const UGrid& g = psi.grid();
  const std::size_t n = g.n * std::max<std::size_t>(padding, 1);
  const numeric::Fft1d fft(n, numeric::FftSign::backward);
  SpectralDensity out;
  out.dk = 2 * std::numbers::pi / (static_cast<double>(n) * g.du);
  out.k.resize(n);
  for (std::size_t m = 0; m < n; ++m)
    out.k[m] = static_cast<double>(numeric::signed_bin(m, n)) * out.dk;
  out.channels = psi.channels();
  out.values.reserve(n * out.channels);
  const double scale = g.du / std::sqrt(2 * std::numbers::pi);
  std::vector<cd> buf(n);
  for (std::size_t s = 0; s < out.channels; ++s) {
    const auto c = psi.channel(s);
    std::fill(buf.begin(), buf.end(), cd{});
    std::copy(c.begin(), c.end(), buf.begin());
    const auto y = fft(buf);
    for (std::size_t m = 0; m < n; ++m)
      out.values.push_back(scale * std::exp(cd(0.0, out.k[m] * g.u0)) * y[m]);
  }
  return out;
}

template <class T>
cd fourier_at(const GridFunction<T>& psi, std::size_t s, double k) {
  const UGrid& g = psi.grid();
  const auto c = psi.channel(s);
  // Phasor recurrence, renormalized to avoid drift.
  const cd step = std::exp(cd(0.0, k * g.du));
  cd phase = std::exp(cd(0.0, k * g.u0));
  cd sum{};
  for (std::size_t i = 0; i < g.n; ++i) {
    sum += phase * c[i];
    phase *= step;
    if ((i & 63) == 63) phase = std::exp(cd(0.0, k * g.u(i + 1)));
  }
  return sum * (g.du / std::sqrt(2 * std::numbers::pi));
}

template class GridFunction<double>;
template class GridFunction<cd>;
template void require_same_grid(const GridFunction<double>&, const GridFunction<double>&);
template void require_same_grid(const GridFunction<cd>&, const GridFunction<cd>&);
template void require_same_grid(const GridFunction<double>&, const GridFunction<cd>&);
template void require_same_grid(const GridFunction<cd>&, const GridFunction<double>&);
template SpectralDensity fourier_u(const GridFunction<double>&, std::size_t);
template SpectralDensity fourier_u(const GridFunction<cd>&, std::size_t);
template cd fourier_at(const GridFunction<double>&, std::size_t, double);
template cd fourier_at(const GridFunction<cd>&, std::size_t, double);

}  // namespace qfcs::boundary
