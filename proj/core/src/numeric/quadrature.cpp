#include "qfcs/numeric/quadrature.hpp"

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/legendre.hpp>

#include <algorithm>
#include <limits>
#include <map>
#include <mutex>
#include <sstream>

#include "qfcs/error.hpp"

namespace qfcs::numeric {

namespace {

GaussRule build_rule(std::size_t n) {
  GaussRule rule;
  const auto positive = boost::math::legendre_p_zeros<double>(static_cast<int>(n));
  std::vector<double> nodes;
  for (double x : positive) {
    if (x == 0.0) {
      nodes.push_back(0.0);
    } else {
      nodes.push_back(-x);
      nodes.push_back(x);
    }
  }
  std::sort(nodes.begin(), nodes.end());
  for (double x : nodes) {
    const double dp = boost::math::legendre_p_prime(static_cast<int>(n), x);
    rule.nodes.push_back(x);
    rule.weights.push_back(2.0 / ((1.0 - x * x) * dp * dp));
  }
  return rule;
}

}  // namespace

GaussRule gauss_legendre(std::size_t n) {
  if (n == 0) throw DomainError("gauss_legendre: need at least one node");
  static std::mutex mutex;
  static std::map<std::size_t, GaussRule> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, build_rule(n)).first;
  return it->second;
}

GaussRule gauss_legendre(std::size_t n, double a, double b) {
  GaussRule rule = gauss_legendre(n);
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  for (std::size_t i = 0; i < rule.size(); ++i) {
    rule.nodes[i] = mid + half * rule.nodes[i];
    rule.weights[i] *= half;
  }
  return rule;
}

GaussRule composite_gauss(double a, double b, std::size_t panels, std::size_t order) {
  const GaussRule base = gauss_legendre(order);
  GaussRule rule;
  rule.nodes.reserve(panels * order);
  rule.weights.reserve(panels * order);
  const double width = (b - a) / static_cast<double>(panels);
  for (std::size_t p = 0; p < panels; ++p) {
    const double lo = a + width * static_cast<double>(p);
    for (std::size_t i = 0; i < order; ++i) {
      rule.nodes.push_back(lo + 0.5 * width * (base.nodes[i] + 1.0));
      rule.weights.push_back(0.5 * width * base.weights[i]);
    }
  }
  return rule;
}

namespace {

template <class R>
R gk_integrate(const std::function<R(double)>& f, double a, double b, double abs_tol,
               double rel_tol) {
  using boost::math::quadrature::gauss_kronrod;
  double error = 0.0;
  double l1 = 0.0;
  const R value = gauss_kronrod<double, 61>::integrate(f, a, b, 25, rel_tol, &error, &l1);
  if (!(error <= std::max(abs_tol, rel_tol * std::abs(value)) * 10.0) &&
      !(error <= abs_tol + rel_tol * l1)) {
    std::ostringstream os;
    os << "adaptive quadrature on [" << a << ", " << b << "] left error estimate " << error;
    throw IntegrationError(os.str());
  }
  return value;
}

template <class R>
R es_integrate(const std::function<R(double)>& f, double a, double tol) {
  boost::math::quadrature::exp_sinh<double> rule;
  double error = 0.0;
  double l1 = 0.0;
  const R value = rule.integrate([&](double x) { return f(x); }, a,
                                 std::numeric_limits<double>::infinity(), tol, &error, &l1);
  if (!(error <= tol * std::max(1.0, l1) * 100.0)) {
    std::ostringstream os;
    os << "semi-infinite quadrature from " << a << " left error estimate " << error;
    throw IntegrationError(os.str());
  }
  return value;
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b, double abs_tol,
                 double rel_tol) {
  return gk_integrate<double>(f, a, b, abs_tol, rel_tol);
}

std::complex<double> integrate_complex(const std::function<std::complex<double>(double)>& f, double a,
                               double b, double abs_tol, double rel_tol) {
  return gk_integrate<std::complex<double>>(f, a, b, abs_tol, rel_tol);
}

double integrate_to_infinity(const std::function<double(double)>& f, double a, double tol) {
  return es_integrate<double>(f, a, tol);
}

std::complex<double> integrate_to_infinity_complex(const std::function<std::complex<double>(double)>& f,
                                           double a, double tol) {
  return es_integrate<std::complex<double>>(f, a, tol);
}

}  // namespace qfcs::numeric
