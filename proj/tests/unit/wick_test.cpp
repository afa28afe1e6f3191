#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "qfcs/bulk/causal_propagator.hpp"
#include "qfcs/error.hpp"
#include "qfcs/harness/rng.hpp"
#include "qfcs/wick/cone.hpp"
#include "qfcs/wick/functional.hpp"
#include "qfcs/wick/star_product.hpp"

using namespace qfcs;
using namespace qfcs::wick;

namespace {

std::vector<cd> random_vector(harness::CounterRng& rng, std::size_t n) {
  std::vector<cd> v(n);
  for (auto& x : v) x = {rng.normal(), rng.normal()};
  return v;
}

cd pairing(const FunctionalGrid& g, std::span<const cd> f, std::span<const cd> h) {
  cd s = 0;
  for (std::size_t i = 0; i < g.size(); ++i) s += g.w[i] * f[i] * h[i];
  return s;
}

double g_kernel(double x, double y) { return std::sin(x - y) * std::exp(-0.1 * (x * x + y * y)); }

}  // namespace

TEST(Functional, LinearAndWickSquareEvaluate) {
  const auto grid = FunctionalGrid::uniform(-1, 1, 9);
  harness::CounterRng rng(1);
  const auto f = random_vector(rng, 9), phi = random_vector(rng, 9), rho = random_vector(rng, 9);
  EXPECT_LT(std::abs(Functional::linear(grid, f).evaluate(phi) - pairing(*grid, f, phi)), 1e-13);
  cd sq = 0;
  for (std::size_t i = 0; i < 9; ++i) sq += grid->w[i] * rho[i] * phi[i] * phi[i];
  EXPECT_LT(std::abs(Functional::wick_square(grid, rho).evaluate(phi) - 0.5 * sq), 1e-13);
  EXPECT_TRUE(Functional::wick_square(grid, rho).is_diagonal(2));
}

TEST(Functional, SymmetrizeIsAProjection) {
  harness::CounterRng rng(2);
  const std::size_t n = 4;
  const auto t = random_vector(rng, tensor_size(n, 3));
  const auto s = symmetrize(t, n, 3);
  const auto s2 = symmetrize(s, n, 3);
  for (std::size_t i = 0; i < s.size(); ++i) EXPECT_LT(std::abs(s[i] - s2[i]), 1e-14);
  EXPECT_LT(std::abs(s[1 * 16 + 2 * 4 + 3] - s[3 * 16 + 1 * 4 + 2]), 1e-14);
  EXPECT_EQ(tensor_size(5, 2), 25u);
}

TEST(StarProduct, LinearProductIsPointwisePlusContraction) {
  const auto grid = FunctionalGrid::uniform(-2, 2, 11);
  const auto p = ProductKernel::causal(grid, g_kernel);
  harness::CounterRng rng(3);
  for (int trial = 0; trial < 5; ++trial) {
    const auto f = random_vector(rng, 11), h = random_vector(rng, 11), phi = random_vector(rng, 11);
    const auto prod = star_product(Functional::linear(grid, f), Functional::linear(grid, h), p);
    const cd expect = pairing(*grid, f, phi) * pairing(*grid, h, phi) + p.smear(f, h);
    EXPECT_LT(std::abs(prod.evaluate(phi) - expect), 1e-12 * (1 + std::abs(expect)));
  }
}

TEST(StarProduct, CausalKernelShapes) {
  const auto grid = FunctionalGrid::uniform(-2, 2, 11);
  const auto p = ProductKernel::causal(grid, g_kernel);
  EXPECT_LT(p.antisymmetry_defect(), 1e-15);
  const auto h = ProductKernel::hadamard(grid, [](double x, double y) { return std::cos(x - y); }, g_kernel);
  EXPECT_LT(h.hermiticity_defect(), 1e-15);
  EXPECT_EQ(to_string(KernelRole::causal), "causal");
}

TEST(StarProduct, AssociativeOnQuadratics) {
  const auto grid = FunctionalGrid::uniform(-2, 2, 7);
  const auto p = ProductKernel::causal(grid, g_kernel);
  harness::CounterRng rng(4);
  auto lin = [&] { return Functional::linear(grid, random_vector(rng, 7)); };
  const auto a = star_product(lin(), lin(), p), b = lin(), c = star_product(lin(), lin(), p);
  const auto left = star_product(star_product(a, b, p), c, p);
  const auto right = star_product(a, star_product(b, c, p), p);
  EXPECT_LT(left.distance(right), 1e-11);
}

TEST(StarProduct, DiagonalSquaresThroughTheCausalKernelDiverge) {
  const auto grid = FunctionalGrid::uniform(-1, 1, 6);
  const auto p = ProductKernel::causal(grid, g_kernel);
  const std::vector<cd> rho(6, 1.0);
  const auto w = Functional::wick_square(grid, rho);
  EXPECT_THROW(star_product(w, w, p), DivergenceError);
  EXPECT_NO_THROW(star_product(w, Functional::linear(grid, rho), p));
}

TEST(AlphaDeformation, InverseAndConstantShift) {
  const auto grid = FunctionalGrid::uniform(-1, 1, 6);
  const auto d = ProductKernel::sample(KernelRole::hadamard, grid, [](double x, double y) { return cd(std::exp(-(x - y) * (x - y)), 0); });
  auto dn = d;
  for (auto& v : dn.values) v = -v;
  harness::CounterRng rng(5);
  const auto f = random_vector(rng, 6);
  // alpha_D of phi(f)^2 adds the constant <f, D f>.
  const auto p = ProductKernel::causal(grid, g_kernel);
  const auto sq = star_product(Functional::linear(grid, f), Functional::linear(grid, f), p);
  const auto shifted = alpha_deform(sq, d);
  const auto diff = shifted - sq;
  const std::vector<cd> zero(6, 0.0);
  EXPECT_LT(std::abs(diff.evaluate(zero) - d.smear(f, f)), 1e-12);
  EXPECT_LT(alpha_deform(shifted, dn).distance(sq), 1e-12);
}

TEST(BoundaryCommutator, SmearsToTheSymplecticForm) {
  // -int int f(V) g(V') d_V d_V' sign(V - V') = int (f g' - f' g) dV for compact f, g.
  const std::size_t n = 401;
  const auto grid = FunctionalGrid::uniform(-4, 4, n);
  const auto b = boundary_commutator_kernel(grid);
  std::vector<cd> f(n), g(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double x = grid->x[i];
    f[i] = std::exp(-2 * (x - 0.3) * (x - 0.3));
    g[i] = x * std::exp(-x * x);
  }
  // Closed form of int (f g' - f' g) by quadrature of the analytic derivatives.
  double ref = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double x = grid->x[i];
    const double fx = std::exp(-2 * (x - 0.3) * (x - 0.3)), dfx = -4 * (x - 0.3) * fx;
    const double gx = x * std::exp(-x * x), dgx = (1 - 2 * x * x) * std::exp(-x * x);
    ref += grid->w[i] * (fx * dgx - dfx * gx);
  }
  EXPECT_NEAR(b.smear(f, g).real(), ref, 1e-6 * std::abs(ref));
  EXPECT_LT(b.antisymmetry_defect(), 1e-9);
}

TEST(Cone, RestrictionReproducesTheCausalPropagator) {
  const DoubleCone cone{4.0};
  const auto f = bulk::RadialTestFunction::gaussian(1.0, 0.2, 0.0, 0.1);
  const auto g = bulk::RadialTestFunction::gaussian(-0.7, -0.3, 0.0, 0.12);
  const auto a = pi_restriction(f, cone, 801), b = pi_restriction(g, cone, 801);
  EXPECT_FALSE(a.tip_warning);
  const double s = sigma_cone(a, b), gfg = bulk::minkowski_causal_propagator(f, g);
  EXPECT_NEAR(s, gfg, 1e-3 * std::abs(gfg));
  EXPECT_NEAR(sigma_cone(a, a), 0, 1e-12);
}
