#include "qfcs/hadamard/parametrix.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qfcs/error.hpp"
#include "qfcs/numeric/parallel.hpp"

namespace qfcs::hadamard {

namespace {
constexpr double pi = std::numbers::pi;
double one(const SpacetimePoint&, const SpacetimePoint&) { return 1.0; }
double zero(const SpacetimePoint&, const SpacetimePoint&) { return 0.0; }
}  // namespace

double sigma_geodesic_minkowski(const SpacetimePoint& x, const SpacetimePoint& y) {
  const double dt = x.t - y.t, r = bulk::spatial_distance(x, y);
  return 0.5 * (r * r - dt * dt);
}

HadamardParametrix HadamardParametrix::minkowski_massless() {
  return {"minkowskiMassless", sigma_geodesic_minkowski, one, zero, [](double) { return 1.0; }, 1.0, 0};
}

HadamardParametrix HadamardParametrix::minkowski_truncated() {
  auto p = minkowski_massless();
  p.name = "minkowskiTruncated";
  return p;
}

HadamardParametrix HadamardParametrix::conformally_rescaled(std::function<double(double)> scale_factor) {
  auto p = minkowski_massless();
  p.name = "conformallyRescaled";
  p.weight = [a = std::move(scale_factor)](double t) {
    const double v = a(t);
    if (!(v > 0)) throw DomainError("conformally rescaled parametrix: scale factor must be positive");
    return 1.0 / v;
  };
  return p;
}

cd sigma_eps(const HadamardParametrix& par, const SpacetimePoint& x, const SpacetimePoint& y, double eps) {
  return {par.sigma(x, y) + 0.5 * eps * eps, eps * (x.t - y.t)};
}

cd parametrix_eval(const HadamardParametrix& par, const SpacetimePoint& x, const SpacetimePoint& y, double eps) {
  const cd s = sigma_eps(par, x, y, eps);
  if (s == 0.0) throw DomainError("parametrix_eval: sigma_eps vanishes (null or coincident points need eps > 0)");
  cd bracket = par.u(x, y) / s;
  const double v = par.v(x, y);
  if (v != 0.0) bracket += v * std::log(s / (par.lambda * par.lambda));
  return par.weight(x.t) * par.weight(y.t) * bracket / (8 * pi * pi);
}

HadamardReport hadamard_difference(const bulk::TwoPointKernel& state, const HadamardParametrix& par,
                                   const ProbeWindow& probe) {
  if (!(probe.r0 > 0) || probe.levels < 2) throw DomainError("hadamard_difference: need r0 > 0 and two levels");
  const auto& d = probe.direction;
  const double norm = std::hypot(d[0], d[1], d[2]);
  if (!(norm > 0)) throw DomainError("hadamard_difference: zero probe direction");

  HadamardReport rep{state.state, par.name, par.lambda, {}, {}, {}, 0.0, 0.0, 0.0};
  const std::size_t n = probe.levels;
  rep.separations.resize(n);
  rep.residuals.resize(n);
  rep.parametrix_values.resize(n);
  numeric::parallel_for(n, [&](std::size_t j) {
    const double r = std::ldexp(probe.r0, -static_cast<int>(j));
    SpacetimePoint y = probe.base;
    for (int c = 0; c < 3; ++c) y.x[c] += r * d[c] / norm;
    const cd h = parametrix_eval(par, probe.base, y, probe.eps);
    const cd w = state(probe.base, y, probe.eps);
    rep.separations[j] = r;
    rep.residuals[j] = std::abs(w - h);
    rep.parametrix_values[j] = std::abs(h);
  });

  // numerically zero residuals sit on a common floor so that exact cancellation fits p = 0
  const double floor = probe.relative_floor * rep.parametrix_values.front();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t j = 0; j < n; ++j) {
    const double r = rep.separations[j], res = rep.residuals[j];
    rep.max_residual = std::max(rep.max_residual, res);
    if (r < 1) rep.max_log_ratio = std::max(rep.max_log_ratio, res / std::log(1 / r));
    const double eff = res <= probe.relative_floor * rep.parametrix_values[j] ? floor : std::max(res, floor);
    const double x = std::log(r), y = std::log(eff);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double m = static_cast<double>(n);
  rep.growth_exponent = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  return rep;
}

}  // namespace qfcs::hadamard
