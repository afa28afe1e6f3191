#include "qfcs/bulk/cosmo_boundary.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "qfcs/error.hpp"

namespace qfcs::bulk {

namespace {

using cd = std::complex<double>;

// quadratic extrapolation to x = 0
template <class T>
T extrapolate(const std::array<double, 3>& x, const std::array<T, 3>& y) {
  T out{};
  for (std::size_t i = 0; i < 3; ++i) {
    double l = 1;
    for (std::size_t j = 0; j < 3; ++j)
      if (j != i) l *= x[j] / (x[j] - x[i]);
    out += l * y[i];
  }
  return out;
}

// Limit of h(tau) as tau -> -inf from samples across [tau_far, tau_far / 10]: the far and
// near thirds of the decade are extrapolated in 1/tau separately and must agree.
template <class T, class F>
T decade_limit(F&& h, double tau_far, double tol, const char* what) {
  std::array<double, 7> taus{};
  for (std::size_t i = 0; i < taus.size(); ++i) taus[i] = tau_far * std::pow(10.0, -static_cast<double>(i) / 6.0);
  auto estimate = [&](std::size_t a, std::size_t b, std::size_t c) {
    return extrapolate<T>({1 / taus[a], 1 / taus[b], 1 / taus[c]}, {h(taus[a]), h(taus[b]), h(taus[c])});
  };
  const T far = estimate(0, 1, 2), near = estimate(4, 5, 6);
  if (!(std::abs(far - near) <= tol * std::abs(far)))
    throw LimitError(std::string("gamma_cosmo: ") + what + " does not converge as tau -> -inf");
  return far;
}

}  // namespace

CosmoBoundaryProfile gamma_cosmo(const std::function<cd(double)>& chi, double k,
                                 const geometry::CosmologyModel& model, boundary::UGrid grid,
                                 const CosmoLimitOptions& opt) {
  if (!(k > 0)) throw DomainError("gamma_cosmo: k must be positive");
  const double lo = model.domain().lo;
  const double tau_far = opt.tau_far > lo ? opt.tau_far : lo * (1 - 1e-12);
  if (!(tau_far < 0) || !std::isfinite(tau_far)) throw LimitError("gamma_cosmo: model has no tau -> -inf end");
  const double inv_h =
      decade_limit<double>([&](double t) { return -model.a(t) * t; }, tau_far, opt.tolerance, "a(tau) |tau|");
  if (!(inv_h > 0)) throw LimitError("gamma_cosmo: scale factor does not vanish like -1/(H tau)");
  const cd amp = decade_limit<cd>([&](double t) { return std::exp(cd(0, k * t)) * chi(t); }, tau_far,
                                  opt.tolerance, "rescaled mode");
  CosmoBoundaryProfile out{grid, {}, 1 / inv_h, amp};
  out.values.reserve(grid.n);
  for (std::size_t i = 0; i < grid.n; ++i) out.values.push_back(amp * std::exp(cd(0, -k * grid.u(i))));
  return out;
}

}  // namespace qfcs::bulk
