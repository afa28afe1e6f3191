#include "qfcs/boundary/horizon.hpp"

#include <cmath>
#include <numbers>

#include "qfcs/boundary/scalar_products.hpp"
#include "qfcs/error.hpp"

namespace qfcs::boundary {

double horizon_thermal_density(double mass, double k) {
  if (!(mass > 0)) throw DomainError("horizon density: M must be positive");
  if (k == 0.0) return mass / std::numbers::pi;
  return 8 * mass * mass * k / -std::expm1(-8 * std::numbers::pi * mass * k);
}

KernelLadder horizon_inner_product_ladder(const HorizonFunction& f, const HorizonFunction& f_prime,
                                          double mass) {
  if (!(mass > 0)) throw DomainError("horizon inner product: M must be positive");
  auto ladder = smear_vacuum_kernel(f, conjugate(f_prime));
  const double area = 4 * mass * mass;
  for (auto& v : ladder.values) v *= area;
  ladder.extrapolated *= area;
  return ladder;
}

cd horizon_inner_product(const HorizonFunction& f, const HorizonFunction& f_prime, double mass) {
  return horizon_inner_product_ladder(f, f_prime, mass).extrapolated;
}

cd horizon_inner_product_fourier(const HorizonFunction& f, const HorizonFunction& f_prime,
                                 double mass) {
  if (!(mass > 0)) throw DomainError("horizon inner product: M must be positive");
  // f_hat(-K) = conj(a_hat(K)) with a = conj f.
  return 4 * mass * mass * positive_frequency_pairing(conjugate(f), conjugate(f_prime));
}

KmsReport kms_check(std::span<const double> k, std::span<const double> w, double beta) {
  if (k.size() != w.size()) throw DomainError("kms_check: size mismatch");
  const std::size_t n = k.size();
  KmsReport r{beta, 0.0, true, n};
  for (std::size_t i = 0; i < n; ++i) {
    if (std::abs(k[i] + k[n - 1 - i]) > 1e-12 * std::max(1.0, std::abs(k[i])))
      throw DomainError("kms_check: k-grid is not symmetric about zero");
    if (!(k[i] > 0)) continue;
    const double plus = w[i], minus = w[n - 1 - i];
    if (minus == 0.0) {
      if (plus != 0.0) r.kms = false;
      continue;
    }
    r.max_deviation = std::max(r.max_deviation, std::abs(plus / (minus * std::exp(beta * k[i])) - 1));
  }
  if (!r.kms) r.max_deviation = std::numeric_limits<double>::infinity();
  return r;
}

double vacuum_weight(double k) { return k > 0 ? 2 * k : 0.0; }

}  // namespace qfcs::boundary
