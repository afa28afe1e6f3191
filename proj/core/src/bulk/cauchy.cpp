#include "qfcs/bulk/cauchy.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "qfcs/error.hpp"
#include "qfcs/numeric/spline.hpp"

namespace qfcs::bulk {

RadialCauchyData RadialCauchyData::sample(const std::function<double(double)>& phi,
                                          const std::function<double(double)>& pi, double r_max, double h) {
  if (!(h > 0) || !(r_max > h)) throw DomainError("RadialCauchyData: need 0 < h < r_max");
  const auto n = static_cast<std::size_t>(std::ceil(r_max / h)) + 1;
  RadialCauchyData out{h, std::vector<double>(n), std::vector<double>(n)};
  for (std::size_t j = 1; j < n; ++j) {
    const double r = h * static_cast<double>(j);
    out.w[j] = r * phi(r);
    out.v[j] = r * pi(r);
  }
  return out;
}

double sigma_bulk(const RadialCauchyData& a, const RadialCauchyData& b) {
  if (a.h != b.h || a.w.size() != b.w.size()) throw UsageError("sigma_bulk: data live on different grids");
  // w v is even in r and vanishes at the far end, so the trapezoid rule is spectrally accurate
  double sum = 0;
  for (std::size_t j = 0; j < a.w.size(); ++j) sum += a.w[j] * b.v[j] - b.w[j] * a.v[j];
  const std::size_t last = a.w.size() - 1;
  sum -= 0.5 * (a.w[last] * b.v[last] - b.w[last] * a.v[last]);
  return 4 * std::numbers::pi * a.h * sum;
}

RadialCauchyData evolve_free(const RadialCauchyData& data, double t) {
  const std::size_t n = data.w.size();
  std::vector<double> x(2 * n - 1), w(2 * n - 1), v(2 * n - 1);
  for (std::size_t j = 0; j < n; ++j) {
    const double r = data.h * static_cast<double>(j);
    x[n - 1 + j] = r;
    x[n - 1 - j] = -r;
    w[n - 1 + j] = data.w[j];
    w[n - 1 - j] = -data.w[j];
    v[n - 1 + j] = data.v[j];
    v[n - 1 - j] = -data.v[j];
  }
  const numeric::CubicSpline ws(x, w), vs(x, v);
  const double lim = data.r_max();
  auto W = [&](double s) { return std::abs(s) > lim ? 0.0 : ws(s); };
  auto dW = [&](double s) { return std::abs(s) > lim ? 0.0 : ws.derivative(s); };
  auto V = [&](double s) { return std::abs(s) > lim ? 0.0 : vs(s); };
  auto IV = [&](double lo, double hi) {
    return vs.integral(std::clamp(hi, -lim, lim)) - vs.integral(std::clamp(lo, -lim, lim));
  };
  RadialCauchyData out{data.h, std::vector<double>(n), std::vector<double>(n)};
  for (std::size_t j = 1; j < n; ++j) {
    const double r = data.h * static_cast<double>(j);
    out.w[j] = 0.5 * (W(r + t) + W(r - t)) + 0.5 * IV(r - t, r + t);
    out.v[j] = 0.5 * (dW(r + t) - dW(r - t)) + 0.5 * (V(r + t) + V(r - t));
  }
  return out;
}

double SphericalWave::field(double t, double r) const {
  if (r < 1e-8) return -2 * dg(t);
  return (g(t - r) - g(t + r)) / r;
}

double SphericalWave::momentum(double t, double r) const {
  if (r < 1e-8) return 0.0;  // never sampled: Cauchy data store r * pi
  return (dg(t - r) - dg(t + r)) / r;
}

RadialCauchyData SphericalWave::cauchy_data(double t, double r_max, double h) const {
  if (!(h > 0) || !(r_max > h)) throw DomainError("SphericalWave: need 0 < h < r_max");
  const auto n = static_cast<std::size_t>(std::ceil(r_max / h)) + 1;
  RadialCauchyData out{h, std::vector<double>(n), std::vector<double>(n)};
  for (std::size_t j = 1; j < n; ++j) {
    const double r = h * static_cast<double>(j);
    out.w[j] = g(t - r) - g(t + r);
    out.v[j] = dg(t - r) - dg(t + r);
  }
  return out;
}

double gamma_scri_value(const SphericalWave& wave, double u) {
  static constexpr std::array<double, 3> vs{1e2, 3e2, 1e3};
  std::array<double, 3> x{}, y{};
  for (std::size_t i = 0; i < 3; ++i) {
    const double v = vs[i];
    const double t = 0.5 * (u + v), r = 0.5 * (v - u);
    if (!(r > 0)) throw DomainError("gamma_scri: u must lie below the extrapolation points");
    x[i] = 1.0 / v;
    y[i] = 0.5 * v * wave.field(t, r);
  }
  // Lagrange extrapolation to 1/v = 0
  double out = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    double l = 1;
    for (std::size_t j = 0; j < 3; ++j)
      if (j != i) l *= x[j] / (x[j] - x[i]);
    out += l * y[i];
  }
  return out;
}

boundary::BoundaryFunction gamma_scri_minkowski(const SphericalWave& wave, boundary::UGrid grid,
                                                boundary::BoundaryFunction::Sphere sphere) {
  return boundary::BoundaryFunction::separable(
      grid, std::move(sphere), [&wave](double u) { return gamma_scri_value(wave, u); },
      [](const geometry::SpherePoint&) { return 1.0; });
}

}  // namespace qfcs::bulk
