#include "qfcs/boundary/kernel_smearing.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "qfcs/error.hpp"
#include "qfcs/numeric/quadrature.hpp"
#include "qfcs/boundary/scalar_products.hpp"

namespace qfcs::boundary {

namespace {

// Cubic Lagrange basis on nodes -1, 0, 1, 2, as coefficients of t^0..t^3.
constexpr std::array<std::array<double, 4>, 4> basis{{
    {0.0, -1.0 / 3, 1.0 / 2, -1.0 / 6},  // L_{-1} = -t(t-1)(t-2)/6
    {1.0, -1.0 / 2, -1.0, 1.0 / 2},      // L_0 = (t+1)(t-1)(t-2)/2
    {0.0, 1.0, 1.0 / 2, -1.0 / 2},       // L_1 = -(t+1)t(t-2)/2
    {0.0, -1.0 / 6, 0.0, 1.0 / 6},       // L_2 = (t+1)t(t-1)/6
}};

// I_q(d, e) = int_0^1 L_q(t) / (d - t - i e)^2 dt.
cd segment_integral(int q, double d, double e) {
  const auto& c = basis[static_cast<std::size_t>(q + 1)];
  if (std::abs(d) > 6.0) {
    static const auto rule = numeric::gauss_legendre(24, 0.0, 1.0);
    cd sum{};
    for (std::size_t i = 0; i < rule.size(); ++i) {
      const double t = rule.nodes[i];
      const double l = c[0] + t * (c[1] + t * (c[2] + t * c[3]));
      const cd z(d - t, -e);
      sum += rule.weights[i] * l / (z * z);
    }
    return sum;
  }
  // t = z0 - s: expand L_q(z0 - s) = sum_p a_p s^p.
  const cd z0(d, -e);
  std::array<cd, 4> a{};
  // (z0 - s)^p = sum_r C(p, r) z0^{p-r} (-s)^r
  static constexpr double binom[4][4] = {{1, 0, 0, 0}, {1, 1, 0, 0}, {1, 2, 1, 0}, {1, 3, 3, 1}};
  for (int p = 0; p < 4; ++p)
    for (int r = 0; r <= p; ++r)
      a[r] += c[p] * binom[p][r] * std::pow(z0, p - r) * ((r % 2 == 0) ? 1.0 : -1.0);
  const auto antiderivative = [&](cd s) {
    return -a[0] / s + a[1] * std::log(s) + a[2] * s + a[3] * s * s / 2.0;
  };
  return antiderivative(z0) - antiderivative(z0 - 1.0);
}

cd smear_at(const HorizonFunction& a, const HorizonFunction& b, double eps) {
  const std::size_t n = a.grid().n;
  const double du = a.grid().du;
  const auto w = kernel_weights(du, eps, n);
  cd total{};
  for (std::size_t s = 0; s < a.channels(); ++s) {
    const auto ca = a.channel(s);
    const auto cb = b.channel(s);
    cd sum{};
    for (std::size_t i = 0; i < n; ++i) {
      if (ca[i] == 0.0) continue;
      cd f{};
      for (std::size_t m = 0; m < n; ++m) f += w[i + n - 1 - m] * cb[m];
      sum += ca[i] * f;
    }
    total += a.sphere().weights()[s] * sum * du;
  }
  return -total / std::numbers::pi;
}

}  // namespace

std::vector<cd> kernel_weights(double du, double eps, std::size_t n) {
  const double e = eps / du;
  std::vector<cd> w(2 * n - 1);
  const long span = static_cast<long>(n) - 1;
  for (long o = -span; o <= span; ++o) {
    cd sum{};
    for (int q = -1; q <= 2; ++q) sum += segment_integral(q, static_cast<double>(o + q), e);
    w[static_cast<std::size_t>(o + span)] = sum / du;
  }
  return w;
}

KernelLadder smear_vacuum_kernel(const HorizonFunction& a, const HorizonFunction& b) {
  require_same_grid(a, b);
  KernelLadder out;
  const double du = a.grid().du;
  for (double f : {1.0, 0.5, 0.25}) {
    out.eps.push_back(f * du);
    out.values.push_back(smear_at(a, b, f * du));
  }
  out.extrapolated = numeric::richardson_halving(out.values);
  return out;
}

KernelLadder smear_vacuum_kernel(const BoundaryFunction& a, const BoundaryFunction& b) {
  return smear_vacuum_kernel(complexify(a), complexify(b));
}

}  // namespace qfcs::boundary
