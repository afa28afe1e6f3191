#include <gtest/gtest.h>

#include <boost/math/special_functions/bessel.hpp>
#include <cmath>
#include <complex>
#include <numbers>

#include "qfcs/error.hpp"
#include "qfcs/harness/rng.hpp"
#include "qfcs/numeric/fft.hpp"
#include "qfcs/numeric/finite_difference.hpp"
#include "qfcs/numeric/hankel.hpp"
#include "qfcs/numeric/parallel.hpp"
#include "qfcs/numeric/quadrature.hpp"
#include "qfcs/numeric/spline.hpp"

using namespace qfcs;
using namespace qfcs::numeric;
using cd = std::complex<double>;
using std::numbers::pi;

TEST(Hankel, HalfIntegerOrdersInClosedForm) {
  for (double x : {0.3, 2.0, 19.9, 20.1, 75.0}) {
    const cd i(0, 1);
    const cd h12 = -i * std::sqrt(2 / (pi * x)) * std::exp(i * x);
    const cd h32 = -std::sqrt(2 / (pi * x)) * std::exp(i * x) * (1.0 + i / x);
    EXPECT_LT(std::abs(hankel1(0.5, x) - h12), 1e-13 * std::abs(h12));
    EXPECT_LT(std::abs(hankel1(1.5, x) - h32), 1e-13 * std::abs(h32));
  }
}

TEST(Hankel, RealOrderAgreesWithBesselPair) {
  for (double nu : {0.0, 0.4, 1.0, 2.3})
    for (double x : {0.5, 5.0, 30.0}) {
      const cd ref(boost::math::cyl_bessel_j(nu, x), boost::math::cyl_neumann(nu, x));
      EXPECT_LT(std::abs(hankel1(nu, x) - ref), 1e-12 * std::abs(ref)) << nu << " " << x;
    }
}

TEST(Hankel, ComplexOrderRecurrenceAndReflection) {
  for (cd nu : {cd(0, 0.8), cd(0.3, 1.2), cd(0, 2.5)})
    for (double x : {0.4, 3.0, 15.0, 25.0}) {
      const cd hm = hankel1(nu - 1.0, x), h = hankel1(nu, x), hp = hankel1(nu + 1.0, x);
      EXPECT_LT(std::abs(hm + hp - 2.0 * nu / x * h), 1e-10 * (std::abs(hm) + std::abs(hp)));
      // Reflection: H1_{-nu} = e^{i pi nu} H1_nu.
      EXPECT_LT(std::abs(hankel1(-nu, x) - std::exp(cd(0, pi) * nu) * h), 1e-10 * std::abs(h));
    }
}

TEST(Hankel, DerivativeMatchesDifferences) {
  for (cd nu : {cd(0.4, 0), cd(0, 0.8)})
    for (double x : {1.0, 10.0, 40.0}) {
      const auto v = hankel1_with_derivative(nu, x);
      const double e = 1e-4 * x;
      const cd d = central_derivative([&](double y) { return hankel1(nu, y); }, x, e);
      EXPECT_LT(std::abs(v.derivative - d), 1e-9 * std::abs(v.derivative));
    }
}

TEST(Quadrature, GaussLegendreExactness) {
  for (std::size_t n : {1u, 4u, 8u, 20u}) {
    const auto r = gauss_legendre(n, -0.5, 2.0);
    const std::size_t deg = 2 * n - 1;
    const double got = integrate_rule(r, [&](double x) { return std::pow(x, static_cast<double>(deg)); });
    const double exact = (std::pow(2.0, deg + 1.0) - std::pow(-0.5, deg + 1.0)) / (deg + 1.0);
    EXPECT_NEAR(got, exact, 1e-12 * std::abs(exact));
  }
  const auto c = composite_gauss(0, pi, 5);
  EXPECT_EQ(c.size(), 40u);
  EXPECT_NEAR(integrate_rule(c, [](double x) { return std::sin(x); }), 2.0, 1e-14);
}

TEST(Quadrature, AdaptiveAndInfinite) {
  EXPECT_NEAR(integrate([](double x) { return std::exp(-x * x); }, -6, 6), std::sqrt(pi), 1e-12);
  EXPECT_NEAR(integrate_to_infinity([](double x) { return std::exp(-2 * x); }, 1.0), std::exp(-2.0) / 2, 1e-13);
  const cd v = integrate_complex([](double x) { return std::exp(cd(0, x)); }, 0, pi);
  EXPECT_NEAR(std::abs(v - cd(0, 2)), 0.0, 1e-12);
}

TEST(Quadrature, RichardsonRemovesPolynomialError) {
  auto f = [](double h) { return 3.0 + 2 * h - 5 * h * h + 0.5 * h * h * h; };
  EXPECT_NEAR(richardson_halving(std::vector<double>{f(0.4), f(0.2), f(0.1), f(0.05)}), 3.0, 1e-13);
}

TEST(Fft, MatchesDirectSum) {
  harness::CounterRng rng(2);
  for (std::size_t n : {7u, 16u, 45u}) {
    std::vector<cd> x(n);
    for (auto& v : x) v = {rng.normal(), rng.normal()};
    for (auto sign : {FftSign::forward, FftSign::backward}) {
      const Fft1d f(n, sign);
      const auto y = f(x);
      for (std::size_t m = 0; m < n; ++m) {
        cd s = 0;
        for (std::size_t k = 0; k < n; ++k)
          s += x[k] * std::polar(1.0, static_cast<double>(sign) * 2 * pi * double(m * k) / double(n));
        EXPECT_LT(std::abs(y[m] - s), 1e-12 * n);
      }
    }
  }
}

TEST(Fft, TwoDimensionalIsSeparable) {
  const std::size_t n0 = 6, n1 = 10;
  std::vector<cd> a(n0 * n1);
  harness::CounterRng rng(9);
  for (auto& v : a) v = {rng.normal(), 0};
  const auto y = Fft2d(n0, n1, FftSign::forward)(a);
  for (std::size_t m0 = 0; m0 < n0; ++m0)
    for (std::size_t m1 = 0; m1 < n1; ++m1) {
      cd s = 0;
      for (std::size_t i = 0; i < n0; ++i)
        for (std::size_t j = 0; j < n1; ++j)
          s += a[i * n1 + j] * std::polar(1.0, -2 * pi * (double(m0 * i) / n0 + double(m1 * j) / n1));
      EXPECT_LT(std::abs(y[m0 * n1 + m1] - s), 1e-11);
    }
  EXPECT_EQ(signed_bin(2, 6), 2);
  EXPECT_EQ(signed_bin(3, 6), -3);
  EXPECT_EQ(signed_bin(4, 6), -2);
  EXPECT_EQ(signed_bin(2, 5), 2);
  EXPECT_EQ(signed_bin(3, 5), -2);
}

TEST(FiniteDifference, OrdersAreExactOnPolynomials) {
  for (int order : {2, 4, 6, 8}) {
    const int deg = order;
    auto p = [&](double x) { return std::pow(x, deg); };
    EXPECT_NEAR(central_derivative(p, 0.7, 0.1, order), deg * std::pow(0.7, deg - 1), 1e-9);
    EXPECT_NEAR(central_second_derivative(p, 0.7, 0.1, order), deg * (deg - 1) * std::pow(0.7, deg - 2), 1e-7);
  }
  EXPECT_THROW(central_first_weights(3), std::invalid_argument);
}

TEST(Spline, ReproducesLinearDataAndIntegrates) {
  std::vector<double> x{0, 0.5, 1.3, 2.0, 3.1}, y;
  for (double v : x) y.push_back(2 - 3 * v);
  const CubicSpline s(x, y);
  for (double v : {0.2, 1.0, 2.9}) {
    EXPECT_NEAR(s(v), 2 - 3 * v, 1e-13);
    EXPECT_NEAR(s.derivative(v), -3, 1e-12);
    EXPECT_NEAR(s.integral(v), 2 * v - 1.5 * v * v, 1e-12);
  }
}

TEST(Spline, HermiteIsExactForCubics) {
  auto f = [](double x) { return x * x * x - 2 * x; };
  auto df = [](double x) { return 3 * x * x - 2; };
  EXPECT_NEAR(hermite(0.3, -1.0, 1.0, f(-1), df(-1), f(1), df(1)), f(0.3), 1e-14);
  EXPECT_NEAR(hermite_slope(0.3, -1.0, 1.0, f(-1), df(-1), f(1), df(1)), df(0.3), 1e-14);
}

TEST(Parallel, CoversEveryIndexAndPropagatesErrors) {
  std::vector<int> hit(1000, 0);
  parallel_for(hit.size(), [&](std::size_t i) { hit[i] += 1; });
  for (int h : hit) EXPECT_EQ(h, 1);
  EXPECT_THROW(parallel_for(10, [](std::size_t i) {
                 if (i == 7) throw DomainError("seven");
               }),
               DomainError);
}
