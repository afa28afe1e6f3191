#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "qfcs/hadamard/parametrix.hpp"
#include "qfcs/microlocal/wavefront.hpp"

using namespace qfcs;
using std::numbers::pi;
using cd = std::complex<double>;

TEST(Parametrix, GeodesicIntervalAndRegularization) {
  const bulk::SpacetimePoint x{0.4, {0.1, 0.2, 0.3}}, y{-0.1, {0.0, -0.1, 0.5}};
  const double s = 0.5 * (-0.25 + 0.01 + 0.09 + 0.04);
  EXPECT_NEAR(hadamard::sigma_geodesic_minkowski(x, y), s, 1e-15);
  const auto par = hadamard::HadamardParametrix::minkowski_massless();
  const double eps = 0.03;
  EXPECT_LT(std::abs(hadamard::sigma_eps(par, x, y, eps) - cd(s + eps * eps / 2, eps * 0.5)), 1e-15);
  // 1 / (8 pi^2 sigma_eps) is the vacuum kernel with t - t' - i eps.
  const cd h = hadamard::parametrix_eval(par, x, y, eps);
  const cd w = bulk::minkowski_vacuum_2pt()(x, y, eps);
  EXPECT_LT(std::abs(h - w) / std::abs(w), 1e-14);
}

TEST(Hadamard, MasslessVacuumHasNoRemainder) {
  const auto r = hadamard::hadamard_difference(bulk::minkowski_vacuum_2pt(),
                                               hadamard::HadamardParametrix::minkowski_massless());
  EXPECT_EQ(r.separations.size(), 14u);
  EXPECT_LT(r.max_residual, 1e-8);
}

TEST(Hadamard, MassiveRemainderIsLogarithmicAtWorst) {
  hadamard::ProbeWindow probe;
  probe.levels = 15;
  const auto r = hadamard::hadamard_difference(bulk::massive_minkowski_2pt(1.0),
                                               hadamard::HadamardParametrix::minkowski_truncated(), probe);
  EXPECT_GT(r.separations.front() / r.separations.back(), 1e4);
  EXPECT_GE(r.growth_exponent, -0.5);
  EXPECT_LE(r.max_log_ratio, 1.0);
  // The dropped V term is m^2 / (8 pi^2) log(sigma) / 2 at short distance: the ratio to log(1/r) tends to m^2 / 8 pi^2.
  const double rmin = r.separations.back();
  EXPECT_NEAR(r.residuals.back() / std::log(1 / rmin), 1 / (8 * pi * pi), 0.3 / (8 * pi * pi));
}

TEST(Hadamard, WrongParametrixIsDetected) {
  // Thermal state against the massless vacuum parametrix: the remainder stays bounded, while a
  // rescaled parametrix leaves a 1/sigma remainder.
  const auto bad = hadamard::HadamardParametrix::conformally_rescaled([](double) { return 2.0; });
  const auto r = hadamard::hadamard_difference(bulk::minkowski_vacuum_2pt(), bad);
  EXPECT_LT(r.growth_exponent, -1.5);
  const auto th = hadamard::hadamard_difference(bulk::minkowski_thermal_2pt(1.0),
                                                hadamard::HadamardParametrix::minkowski_massless());
  EXPECT_GT(th.growth_exponent, -0.5);
}

namespace {

microlocal::SampledKernel2D vacuum_kernel(std::size_t n, double du, double eps) {
  return microlocal::SampledKernel2D::sample(-0.5 * du * static_cast<double>(n), du, n, eps,
                                             [=](double u, double v) { return -1.0 / (pi * std::pow(cd(u - v, -eps), 2)); });
}

}  // namespace

TEST(Microlocal, VacuumKernelIsPositivelyOriented) {
  const double du = 0.05;
  const auto k = vacuum_kernel(256, du, 4 * du);
  const auto reports = microlocal::msc_orientation(k, {{0, 0}, {1, 1}, {-1.5, -1.5}});
  for (const auto& r : reports) {
    EXPECT_EQ(r.verdict, microlocal::Verdict::pass);
    EXPECT_GE(r.orientation_score, 0.99);
    EXPECT_GT(r.mass_pm, 100 * r.mass_mp);
  }
}

TEST(Microlocal, ConjugateKernelFails) {
  const double du = 0.05;
  const auto k = vacuum_kernel(256, du, 4 * du).conjugate();
  for (const auto& r : microlocal::msc_orientation(k, {{0, 0}, {0.7, 0.7}})) {
    EXPECT_EQ(r.verdict, microlocal::Verdict::fail);
    EXPECT_LE(r.orientation_score, 0.01);
  }
}

TEST(Microlocal, SmoothKernelIsRegular) {
  const auto k = microlocal::SampledKernel2D::sample(-6.4, 0.05, 256, 0.2, [](double u, double v) {
    return cd(std::exp(-(u * u + v * v) / 0.5), 0);
  });
  const auto r = microlocal::msc_orientation(k, {{0, 0}});
  EXPECT_EQ(r.front().verdict, microlocal::Verdict::regular);
}

TEST(Microlocal, SpectrumConservesEnergy) {
  // Bins carry |DFT|^2 / n^2, so they sum to the windowed sample energy.
  const auto k = vacuum_kernel(128, 0.05, 0.2);
  const auto s = microlocal::windowed_spectrum(k, {0, 0}, 32);
  EXPECT_NEAR(s.total(), s.sample_energy, 1e-12 * s.sample_energy);
}
