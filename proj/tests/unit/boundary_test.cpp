#include <gtest/gtest.h>

#include <cmath>
#include <memory>
#include <numbers>

#include "qfcs/boundary/horizon.hpp"
#include "qfcs/boundary/kernel_smearing.hpp"
#include "qfcs/boundary/scalar_products.hpp"
#include "qfcs/error.hpp"

using namespace qfcs;
using namespace qfcs::boundary;
using std::numbers::pi;

namespace {

auto point_sphere() { return std::make_shared<const geometry::SphereGrid>(0); }

BoundaryFunction gaussian(UGrid g, double c, double w) {
  return BoundaryFunction::sample(g, point_sphere(), [=](double u, const geometry::SpherePoint&) {
    return std::exp(-(u - c) * (u - c) / (2 * w * w));
  });
}

BoundaryFunction odd_gaussian(UGrid g, double c) {
  return BoundaryFunction::sample(g, point_sphere(), [=](double u, const geometry::SpherePoint&) {
    return (u - c) * std::exp(-(u - c) * (u - c) / 2);
  });
}

}  // namespace

TEST(HorizonDensity, DetailedBalanceAndZeroLimit) {
  for (double m : {0.5, 1.0, 2.0}) {
    EXPECT_NEAR(horizon_thermal_density(m, 0), m / pi, 1e-15);
    // rho = (M / pi)(1 + 4 pi M k) + O(k^2).
    EXPECT_NEAR(horizon_thermal_density(m, 1e-9), m / pi + 4 * m * m * 1e-9, 1e-14);
    for (double k : {0.01, 0.1, 0.4}) {
      const double r = horizon_thermal_density(m, k) / horizon_thermal_density(m, -k);
      EXPECT_NEAR(std::log(r), 8 * pi * m * k, 1e-12 * 8 * pi * m * k + 1e-13);
    }
  }
}

TEST(Kms, DetectsTheTemperatureOfSyntheticWeights) {
  std::vector<double> k, w;
  for (int i = -20; i <= 20; ++i) {
    k.push_back(0.1 * i);
    w.push_back(thermal_weight(k.back(), 3.0));
  }
  const auto ok = kms_check(k, w, 3.0);
  EXPECT_TRUE(ok.kms);
  EXPECT_LT(ok.max_deviation, 1e-12);
  EXPECT_GT(kms_check(k, w, 3.3).max_deviation, 0.1);
  std::vector<double> vac;
  for (double x : k) vac.push_back(vacuum_weight(x));
  EXPECT_FALSE(kms_check(k, vac, 3.0).kms);
}

TEST(ThermalWeight, LimitsAndRatio) {
  EXPECT_DOUBLE_EQ(thermal_weight(0, 4), 0.5);
  for (double k : {-3.0, 0.2, 5.0}) EXPECT_NEAR(thermal_weight(k, 2) / thermal_weight(-k, 2), std::exp(2 * k), 1e-12 * std::exp(2 * k));
  EXPECT_NEAR(thermal_weight(50, 10), vacuum_weight(50), 1e-200);
  EXPECT_DOUBLE_EQ(vacuum_weight(-1), 0);
}

TEST(ScalarProducts, GaussianClosedForms) {
  const auto g = UGrid::centered(10, 1024);
  const auto a = gaussian(g, 0, 1), b = odd_gaussian(g, 0);
  // Unit Gaussian: |psi_hat|^2 = e^{-k^2}, int_0^inf 2k e^{-k^2} = 1, times the sphere area.
  EXPECT_NEAR(mu_vacuum(a, a), 4 * pi, 1e-10);
  // int (a b' - b a') du = int e^{-u^2} du.
  EXPECT_NEAR(sigma_boundary(a, b), 4 * pi * std::sqrt(pi), 1e-9);
  EXPECT_NEAR(sigma_boundary(a, b), -sigma_boundary(b, a), 1e-12);
  EXPECT_NEAR(sigma_boundary(a, a), 0, 1e-14);
}

TEST(ScalarProducts, PairingImaginaryPartIsHalfTheSymplecticForm) {
  const auto g = UGrid::centered(10, 1024);
  const auto a = gaussian(g, 0.2, 0.8), b = odd_gaussian(g, -0.4);
  const cd w = positive_frequency_pairing(a, b);
  EXPECT_NEAR(w.imag(), 0.5 * sigma_boundary(a, b), 1e-8);
  const cd ab = boundary_two_point(a, b), ba = boundary_two_point(b, a);
  EXPECT_NEAR(std::abs(ab - ba - cd(0, sigma_boundary(a, b))), 0, 1e-8);
  EXPECT_NEAR(std::abs(ab - std::conj(ba)), 0, 1e-8);
}

TEST(ScalarProducts, CauchySchwarzOnRandomCombinations) {
  const auto g = UGrid::centered(10, 512);
  const auto a = gaussian(g, 0.5, 0.7), b = odd_gaussian(g, -1), c = gaussian(g, -2, 1.1);
  for (double s : {-2.0, -0.3, 0.7, 3.0}) {
    const auto f = a + b * s, h = c + a * (1 - s);
    const double lhs = std::norm(boundary_two_point(f, h));
    EXPECT_LE(lhs, boundary_two_point(f, f).real() * boundary_two_point(h, h).real() * (1 + 1e-12));
    EXPECT_LE(0.25 * std::pow(sigma_boundary(f, h), 2), mu_vacuum(f, f) * mu_vacuum(h, h) * (1 + 1e-12));
  }
}

TEST(ScalarProducts, ThermalDominatesVacuumAndConverges) {
  const auto g = UGrid::centered(12, 961);
  const auto b = odd_gaussian(g, 0);
  const double vac = mu_vacuum(b, b);
  double prev = INFINITY;
  for (double beta : {1.0, 10.0, 100.0, 1000.0}) {
    const double th = mu_thermal(b, b, beta);
    EXPECT_GE(th, vac);
    EXPECT_LT(th, prev);
    prev = th;
  }
  EXPECT_LT(std::abs(mu_thermal(b, b, 1e3) / vac - 1), 1e-6);
}

TEST(KernelSmearing, AgreesWithTheFourierPairing) {
  const auto g = UGrid::centered(10, 1024);
  const auto a = gaussian(g, 0, 1), b = odd_gaussian(g, 0.3);
  const auto ladder = smear_vacuum_kernel(a, b);
  EXPECT_EQ(ladder.eps.size(), ladder.values.size());
  const cd p = positive_frequency_pairing(a, b);
  EXPECT_LT(std::abs(ladder.extrapolated - p) / std::abs(p), 1e-6);
  // The raw ladder approaches the limit as eps shrinks.
  EXPECT_LT(std::abs(ladder.values.back() - p), std::abs(ladder.values.front() - p));
}

TEST(KernelSmearing, HorizonProductMatchesFourierSide) {
  const auto g = UGrid::centered(10, 1024);
  for (double m : {0.5, 2.0}) {
    const auto a = complexify(gaussian(g, 0, 1)), b = complexify(odd_gaussian(g, 0.3));
    const cd x = horizon_inner_product(a, b, m), y = horizon_inner_product_fourier(a, b, m);
    EXPECT_LT(std::abs(x - y) / std::abs(y), 1e-6);
  }
}

TEST(GridFunction, MismatchedGridsAreRejected) {
  const auto a = gaussian(UGrid::centered(10, 512), 0, 1), b = gaussian(UGrid::centered(10, 256), 0, 1);
  EXPECT_THROW(sigma_boundary(a, b), UsageError);
  EXPECT_TRUE(a.support_interior());
  EXPECT_FALSE(gaussian(UGrid::centered(2, 256), 0, 1).support_interior());
}

TEST(GridFunction, FourierTransformOfAGaussian) {
  const auto a = gaussian(UGrid::centered(12, 1024), 0, 1);
  for (double k : {0.0, 0.7, 2.0}) EXPECT_NEAR(std::abs(fourier_at(a, 0, k) - cd(std::exp(-k * k / 2))), 0, 1e-12);
  const auto s = fourier_u(a);
  for (std::size_t m = 0; m < s.k.size(); m += 37)
    EXPECT_NEAR(std::abs(s.at(0, m) - cd(std::exp(-s.k[m] * s.k[m] / 2))), 0, 1e-10);
}
