#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <vector>

namespace qfcs::numeric {

// Gauss-Legendre rule on [-1, 1].
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;

  std::size_t size() const { return nodes.size(); }
};

GaussRule gauss_legendre(std::size_t n);

// Rule mapped to [a, b], nodes ascending.
GaussRule gauss_legendre(std::size_t n, double a, double b);

// Composite rule: `panels` equal panels on [a, b], `order` points each.
GaussRule composite_gauss(double a, double b, std::size_t panels, std::size_t order = 8);

template <class F>
auto integrate_rule(const GaussRule& rule, F&& f) {
  using R = decltype(f(0.0));
  R sum{};
  for (std::size_t i = 0; i < rule.size(); ++i) sum += rule.weights[i] * f(rule.nodes[i]);
  return sum;
}

// Adaptive Gauss-Kronrod on a finite interval. Throws IntegrationError when the
// error estimate stays above tolerance.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol = 1e-12, double rel_tol = 1e-12);
std::complex<double> integrate_complex(const std::function<std::complex<double>(double)>& f, double a,
                               double b, double abs_tol = 1e-12, double rel_tol = 1e-12);

// [a, +inf) via exp-sinh.
double integrate_to_infinity(const std::function<double(double)>& f, double a,
                             double tol = 1e-12);
std::complex<double> integrate_to_infinity_complex(const std::function<std::complex<double>(double)>& f,
                                           double a, double tol = 1e-12);

// Richardson elimination of the leading terms c1*h + c2*h^2 + ... from values
// at h, h/2, h/4, ... (values ordered from coarse to fine).
template <class T>
T richardson_halving(std::vector<T> values) {
  const std::size_t n = values.size();
  for (std::size_t level = 1; level < n; ++level) {
    const double factor = std::ldexp(1.0, static_cast<int>(level));
    for (std::size_t i = n - 1; i >= level; --i)
      values[i] = (factor * values[i] - values[i - 1]) / (factor - 1.0);
  }
  return values.back();
}

}  // namespace qfcs::numeric
