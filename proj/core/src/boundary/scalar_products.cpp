#include "qfcs/boundary/scalar_products.hpp"

#include <cmath>
#include <numbers>

#include "qfcs/error.hpp"
#include "qfcs/numeric/finite_difference.hpp"
#include "qfcs/numeric/quadrature.hpp"

namespace qfcs::boundary {

namespace {

constexpr std::size_t padding = 8;
constexpr int max_derivative = 7;

// D_r = a_hat^(r)(0) = (du / sqrt(2 pi)) sum (i u)^r a(u).
std::array<cd, max_derivative> moments(const UGrid& g, std::span<const cd> a) {
  std::array<cd, max_derivative> d{};
  const double scale = g.du / std::sqrt(2 * std::numbers::pi);
  for (std::size_t i = 0; i < g.n; ++i) {
    cd p = a[i] * scale;
    const cd iu(0.0, g.u(i));
    for (int r = 0; r < max_derivative; ++r) {
      d[r] += p;
      p *= iu;
    }
  }
  return d;
}

double binomial(int n, int r) {
  double b = 1.0;
  for (int j = 1; j <= r; ++j) b = b * (n - r + j) / j;
  return b;
}

}  // namespace

double sigma_boundary(const BoundaryFunction& psi, const BoundaryFunction& psi_prime) {
  require_same_grid(psi, psi_prime);
  const double du = psi.grid().du;
  double total = 0.0;
  for (std::size_t s = 0; s < psi.channels(); ++s) {
    const auto a = psi.channel(s);
    const auto b = psi_prime.channel(s);
    const auto da = numeric::derivative_samples<double>(a, du);
    const auto db = numeric::derivative_samples<double>(b, du);
    double sum = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * db[i] - b[i] * da[i];
    total += psi.sphere().weights()[s] * sum * du;
  }
  return total;
}

cd positive_frequency_pairing(const HorizonFunction& a, const HorizonFunction& b) {
  require_same_grid(a, b);
  const auto fa = fourier_u(a, padding);
  const auto fb = fourier_u(b, padding);
  const double h = fa.dk;
  const std::size_t n = fa.k.size();
  // Euler-Maclaurin: int_0^inf f = h sum_{m>=1} f(mh) + sum_j B_2j/(2j)! h^2j f^(2j-1)(0),
  // with f = 2k g and f^(j)(0) = 2j g^(j-1)(0).
  static constexpr double em[] = {1.0 / 12, -1.0 / 720, 1.0 / 30240, -1.0 / 1209600};
  cd total{};
  for (std::size_t s = 0; s < a.channels(); ++s) {
    const auto ca = fa.channel(s);
    const auto cb = fb.channel(s);
    cd sum{};
    for (std::size_t m = 1; m < (n + 1) / 2; ++m) sum += 2 * fa.k[m] * std::conj(ca[m]) * cb[m];
    sum *= h;
    const auto da = moments(a.grid(), a.channel(s));
    const auto db = moments(b.grid(), b.channel(s));
    for (int j = 1; j <= 4; ++j) {
      const int order = 2 * j - 1;  // derivative of f
      const int gn = order - 1;     // derivative of g
      cd g{};
      for (int r = 0; r <= gn; ++r) g += binomial(gn, r) * std::conj(da[r]) * db[gn - r];
      sum += em[j - 1] * std::pow(h, 2 * j) * (2.0 * order) * g;
    }
    total += a.sphere().weights()[s] * sum;
  }
  return total;
}

HorizonFunction complexify(const BoundaryFunction& psi) {
  return HorizonFunction(psi.grid(), psi.sphere_ptr(),
                         std::vector<cd>(psi.values().begin(), psi.values().end()));
}

HorizonFunction conjugate(const HorizonFunction& f) {
  std::vector<cd> v(f.values());
  for (auto& x : v) x = std::conj(x);
  return HorizonFunction(f.grid(), f.sphere_ptr(), std::move(v));
}

cd positive_frequency_pairing(const BoundaryFunction& a, const BoundaryFunction& b) {
  return positive_frequency_pairing(complexify(a), complexify(b));
}

double mu_vacuum(const BoundaryFunction& psi, const BoundaryFunction& psi_prime) {
  return positive_frequency_pairing(psi, psi_prime).real();
}

double thermal_weight(double k, double beta) {
  if (!(beta > 0)) throw DomainError("thermal weight: beta must be positive");
  if (k == 0.0) return 2.0 / beta;
  return -2.0 * k / std::expm1(-beta * k);
}

double mu_thermal(const BoundaryFunction& psi, const BoundaryFunction& psi_prime, double beta) {
  if (!(beta > 0)) throw DomainError("mu_thermal: beta must be positive");
  require_same_grid(psi, psi_prime);
  // Split 2k/(1 - e^{-beta k}) = 2k Theta(k) + 2|k|/(e^{beta|k|} - 1); the second part is
  // even in k, as is Re(conj psi_hat psi_hat') for real data.
  const double nyquist = std::numbers::pi / psi.grid().du;
  const double k_max = std::min(nyquist, 45.0 / beta);
  double excess = 0.0;
  for (std::size_t s = 0; s < psi.channels(); ++s) {
    const auto integrand = [&](double k) {
      const double w = k == 0.0 ? 4.0 / beta : 4.0 * k / std::expm1(beta * k);
      return w * std::real(std::conj(fourier_at(psi, s, k)) * fourier_at(psi_prime, s, k));
    };
    excess += psi.sphere().weights()[s] * numeric::integrate(integrand, 0.0, k_max, 1e-16, 1e-12);
  }
  return mu_vacuum(psi, psi_prime) + excess;
}

cd boundary_two_point(const BoundaryFunction& psi, const BoundaryFunction& psi_prime) {
  return {mu_vacuum(psi, psi_prime), 0.5 * sigma_boundary(psi, psi_prime)};
}

}  // namespace qfcs::boundary
