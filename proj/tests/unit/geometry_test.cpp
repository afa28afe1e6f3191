#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "qfcs/error.hpp"
#include "qfcs/geometry/cosmology.hpp"
#include "qfcs/geometry/schwarzschild.hpp"
#include "qfcs/geometry/sphere.hpp"
#include "qfcs/harness/rng.hpp"

using namespace qfcs;
using namespace qfcs::geometry;
using std::numbers::pi;

TEST(Cosmology, DeSitterScaleFactorAndCurvature) {
  const double h = 1.7;
  const auto m = CosmologyModel::de_sitter(h);
  EXPECT_EQ(m.kind(), CosmologyKind::deSitter);
  for (double tau : {-50.0, -3.0, -0.2}) {
    EXPECT_NEAR(m.a(tau), -1 / (h * tau), 1e-14 * m.a(tau));
    EXPECT_NEAR(m.a_prime(tau), 1 / (h * tau * tau), 1e-12 * std::abs(m.a_prime(tau)));
    EXPECT_NEAR(m.ricci(tau), 12 * h * h, 1e-10);
  }
  EXPECT_THROW(m.a(0.5), DomainError);
}

TEST(Cosmology, PowerLawDerivativesMatchDifferences) {
  const auto m = CosmologyModel::power_law(2.0, -1.5);
  const double tau = -1.3, e = 1e-4;
  EXPECT_NEAR(m.a_prime(tau), (m.a(tau + e) - m.a(tau - e)) / (2 * e), 1e-6);
  EXPECT_NEAR(m.a_double_prime(tau), (m.a_prime(tau + e) - m.a_prime(tau - e)) / (2 * e), 1e-5);
}

TEST(Cosmology, CustomTableReproducesSmoothData) {
  std::vector<double> tau, a;
  for (int i = 0; i <= 400; ++i) {
    tau.push_back(-10 + 0.02 * i);
    a.push_back(std::exp(0.1 * tau.back()));
  }
  const auto m = CosmologyModel::custom(tau, a);
  EXPECT_NEAR(m.a(-4.321), std::exp(-0.4321), 1e-8);
  EXPECT_NEAR(m.a_prime(-4.321), 0.1 * std::exp(-0.4321), 1e-6);
  EXPECT_THROW(CosmologyModel::custom({0, 1}, {1, -1}), Error);
}

TEST(Cosmology, KindNamesRoundTrip) {
  for (auto k : {CosmologyKind::deSitter, CosmologyKind::powerLaw, CosmologyKind::constant, CosmologyKind::custom})
    EXPECT_EQ(cosmology_kind_from_string(to_string(k)), k);
}

TEST(ConformalTime, ExponentialExpansionClosedForm) {
  const double a0 = 1.5, alpha = 0.7, d = -2.0;
  const auto m = ProperTimeScaleFactor::exponential(a0, alpha);
  for (double t : {-1.0, 0.0, 0.5, 3.0})
    EXPECT_NEAR(conformal_time(m, t, d), d + (1 - std::exp(-alpha * t)) / (a0 * alpha), 1e-10);
  EXPECT_NEAR(conformal_time(ProperTimeScaleFactor::constant(2.0), 3.0, 1.0), 2.5, 1e-12);
}

TEST(Schwarzschild, TortoiseDerivativeAndHorizonGuard) {
  const SchwarzschildChart c(1.3);
  EXPECT_DOUBLE_EQ(c.hawking_beta(), 2 * pi / c.surface_gravity());
  for (double r : {0.5, 1.0, 3.0, 10.0}) {
    const double e = 1e-5;
    const double d = (c.tortoise(r + e) - c.tortoise(r - e)) / (2 * e);
    EXPECT_NEAR(d, 1 / (1 - 2 * c.mass() / r), 1e-6 * std::abs(d));
  }
  EXPECT_THROW(c.tortoise(2.6), SingularCoordinateError);
}

TEST(Schwarzschild, KruskalProductIsAFunctionOfRadius) {
  const SchwarzschildChart c(0.8);
  const double m = c.mass();
  for (double t : {-2.0, 0.0, 5.0}) {
    for (double r : {2.0, 4.0, 9.0}) {
      const auto p = c.kruskal_uv(KruskalRegion::W, t, r);
      EXPECT_LT(p.U, 0);
      EXPECT_GT(p.V, 0);
      EXPECT_NEAR(p.U * p.V, -(r / (2 * m) - 1) * std::exp(r / (2 * m)), 1e-9 * std::exp(r / (2 * m)));
      EXPECT_NEAR(-p.V / p.U, std::exp(t / (2 * m)), 1e-9 * std::exp(t / (2 * m)));
    }
    for (double r : {0.3, 1.0, 1.5}) {
      const auto p = c.kruskal_uv(KruskalRegion::B, t, r);
      EXPECT_GT(p.U, 0);
      EXPECT_GT(p.V, 0);
      EXPECT_NEAR(p.U * p.V, (1 - r / (2 * m)) * std::exp(r / (2 * m)), 1e-12);
    }
  }
}

TEST(Sphere, StereographicAndSpinorRoundTrips) {
  harness::CounterRng rng(4);
  for (int i = 0; i < 200; ++i) {
    const SpherePoint p{std::acos(rng.uniform(-1, 1)), rng.uniform(0, 2 * pi)};
    const auto z = stereographic(p);
    EXPECT_NEAR(std::abs(z.zeta), 1 / std::tan(p.theta / 2), 1e-10 * (1 + std::abs(z.zeta)));
    const auto a = p.cartesian(), b = from_stereographic(z).cartesian(), c = from_spinor(spinor(p)).cartesian();
    for (int k = 0; k < 3; ++k) {
      EXPECT_NEAR(a[k], b[k], 1e-12);
      EXPECT_NEAR(a[k], c[k], 1e-12);
    }
    const auto s = spinor(p);
    EXPECT_NEAR(std::norm(s[0]) + std::norm(s[1]), 1.0, 1e-14);
  }
  const auto north = stereographic({0.0, 0.0});
  EXPECT_TRUE(north.infinite);
}

TEST(Sphere, HarmonicsAreOrthonormalOnTheGrid) {
  const SphereGrid g(4);
  EXPECT_NEAR(g.integrate([](const SpherePoint&) { return 1.0; }), 4 * pi, 1e-12);
  for (int l = 0; l <= 4; ++l)
    for (int m = -l; m <= l; ++m)
      for (int lp = 0; lp <= 4; ++lp)
        for (int mp = -lp; mp <= lp; ++mp) {
          const auto v = g.integrate([&](const SpherePoint& p) {
            return std::conj(spherical_harmonic(l, m, p)) * spherical_harmonic(lp, mp, p);
          });
          EXPECT_NEAR(std::abs(v - std::complex<double>(l == lp && m == mp ? 1.0 : 0.0)), 0.0, 1e-12);
        }
}

TEST(Sphere, LowHarmonicsClosedForms) {
  const SpherePoint p{0.7, 1.9};
  EXPECT_NEAR(spherical_harmonic(0, 0, p).real(), 0.5 / std::sqrt(pi), 1e-15);
  EXPECT_NEAR(spherical_harmonic(1, 0, p).real(), std::sqrt(3 / (4 * pi)) * std::cos(0.7), 1e-15);
  const auto y11 = spherical_harmonic(1, 1, p);
  const auto expect = -std::sqrt(3 / (8 * pi)) * std::sin(0.7) * std::polar(1.0, 1.9);
  EXPECT_NEAR(std::abs(y11 - expect), 0.0, 1e-15);
}
