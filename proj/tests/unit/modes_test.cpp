#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "qfcs/error.hpp"
#include "qfcs/geometry/cosmology.hpp"
#include "qfcs/harness/rng.hpp"
#include "qfcs/modes/de_sitter.hpp"
#include "qfcs/modes/duhamel.hpp"
#include "qfcs/modes/solver.hpp"
#include "qfcs/numeric/finite_difference.hpp"

using namespace qfcs;
using namespace qfcs::modes;
using std::numbers::pi;

namespace {

std::vector<double> uniform_grid(double lo, double hi, std::size_t n) {
  std::vector<double> g(n);
  for (std::size_t i = 0; i < n; ++i) g[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  return g;
}

}  // namespace

TEST(NuParameter, SpotValuesAndBranch) {
  EXPECT_EQ(nu_parameter(0, 0, 1).value, cd(1.5, 0));
  EXPECT_EQ(nu_parameter(0, 1.0 / 6.0, 1).value, cd(0.5, 0));
  EXPECT_EQ(nu_parameter(1.5, 0, 1).value, cd(0, 0));
  const cd heavy = nu_parameter(3, 0, 1).value;
  EXPECT_DOUBLE_EQ(heavy.real(), 0);
  EXPECT_NEAR(heavy.imag(), std::sqrt(9 - 2.25), 1e-14);
  // Only m / H enters.
  EXPECT_NEAR(std::abs(nu_parameter(2, 0.05, 4).value - nu_parameter(0.5, 0.05, 1).value), 0, 1e-15);
}

TEST(DeSitterMode, HalfAndThreeHalvesClosedForms) {
  harness::CounterRng rng(5);
  for (int i = 0; i < 50; ++i) {
    const double k = std::exp(rng.uniform(-2, 3)), tau = -std::exp(rng.uniform(-2, 4));
    const auto m = ds_mode(k, tau, {0.5});
    EXPECT_LT(std::abs(m.chi - std::exp(cd(0, -k * tau)) / std::sqrt(2 * k)), 1e-12);
    EXPECT_LT(std::abs(m.dchi - cd(0, -k) * std::exp(cd(0, -k * tau)) / std::sqrt(2 * k)), 1e-11 * k);
    // |chi|^2 for nu = 3/2 is (1 + 1/(k tau)^2) / 2k.
    const auto m3 = ds_mode(k, tau, {1.5});
    EXPECT_NEAR(std::norm(m3.chi) * 2 * k, 1 + 1 / (k * k * tau * tau), 1e-11 * (1 + 1 / (k * k * tau * tau)));
  }
}

TEST(DeSitterMode, WronskianIsMinusI) {
  for (cd nu : {cd(0.5, 0), cd(1.5, 0), cd(0.4, 0), cd(0, 0.8), cd(0, 2)})
    for (double k : {0.1, 1.0, 10.0}) {
      const auto m = ds_mode_function(k, uniform_grid(-100, -0.1, 201), {nu});
      EXPECT_LT(max_wronskian_drift(m), 1e-10) << nu << " " << k;
    }
}

TEST(DeSitterMode, SolvesTheModeEquation) {
  for (cd nu : {cd(0.4, 0), cd(0, 0.8)}) {
    const double k = 2.0, tau = -1.3, h = 1e-3;
    auto chi = [&](double t) { return ds_mode(k, t, {nu}).chi; };
    const cd lhs = numeric::central_second_derivative(chi, tau, h);
    const cd rhs = -(k * k + (0.25 - nu * nu) / (tau * tau)) * chi(tau);
    EXPECT_LT(std::abs(lhs - rhs), 1e-7 * std::abs(rhs));
  }
}

TEST(Solver, ReproducesDeSitterModes) {
  const auto grid = uniform_grid(-60, -0.1, 400);
  for (cd nu : {cd(0.4, 0), cd(0, 0.8)}) {
    const auto v = ModePotential::de_sitter({nu});
    for (double k : {0.3, 4.0}) {
      const auto m = solve_mode(v, k, grid, AsymptoticVacuum{-60});
      double worst = 0;
      for (std::size_t i = 0; i < grid.size(); ++i)
        worst = std::max(worst, std::abs(m.chi[i] - ds_mode(k, grid[i], {nu}).chi) / std::abs(m.chi[i]));
      EXPECT_LT(worst, 1e-8) << nu << " " << k;
      EXPECT_LT(max_wronskian_drift(m), 1e-10);
    }
  }
}

TEST(Solver, WronskianConservedForArbitraryData) {
  const auto v = ModePotential::custom([](double t) { return 3 * std::sin(t) / (1 + t * t); }, {});
  const auto m = solve_mode(v, 1.7, uniform_grid(-20, 20, 500), ExplicitData{-20, cd(0.3, 0.1), cd(-0.2, 0.9)});
  const auto w = wronskian(m);
  for (const cd& x : w) EXPECT_LT(std::abs(x - w.front()), 1e-10);
}

TEST(Solver, PreconditionsOnTheStart) {
  const auto v = ModePotential::perturbed_de_sitter({0.4}, [](double t) { return 1 / (t * t * t); }, 3);
  const auto grid = uniform_grid(-100, -1, 10);
  EXPECT_THROW(solve_mode(v, 0.1, grid, AsymptoticVacuum{-100}), PreconditionError);
  EXPECT_NO_THROW(solve_mode(v, 0.1, grid, AsymptoticVacuum{-4000}));
  EXPECT_THROW(solve_mode(ModePotential::de_sitter({0.4}), 1, grid, AsymptoticVacuum{-50}), PreconditionError);
}

TEST(Solver, PotentialFromModelMatchesDeSitterIndex) {
  const auto model = geometry::CosmologyModel::de_sitter(1.0);
  const double m = 0.7, xi = 0.1;
  const auto v = ModePotential::from_model(model, m, xi);
  const cd nu = nu_parameter(m, xi, 1).value;
  for (double tau : {-3.0, -0.5})
    EXPECT_NEAR(v(tau), ((0.25 - nu * nu) / (tau * tau)).real(), 1e-10 / (tau * tau));
}

TEST(Duhamel, SeriesConvergesToTheDirectSolve) {
  const cd nu(0.4, 0);
  const auto v = ModePotential::perturbed_de_sitter({nu}, [](double t) { return 0.5 / (1 + t * t * t * t); }, 4);
  const auto grid = uniform_grid(-10, -0.5, 120);
  const double k = 1.5;
  const auto direct = solve_mode(v, k, grid, AsymptoticVacuum{-400});
  const auto series = duhamel_series(v, {nu}, k, grid, 8);
  ASSERT_EQ(series.order_norms.size(), 9u);
  for (std::size_t n = 2; n < series.order_norms.size(); ++n)
    EXPECT_LT(series.order_norms[n], series.order_norms[n - 1]);
  double worst = 0;
  for (std::size_t i = 0; i < grid.size(); ++i) worst = std::max(worst, std::abs(series.chi[i] - direct.chi[i]));
  EXPECT_LT(worst, 1e-6);
}
