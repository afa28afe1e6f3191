#include <benchmark/benchmark.h>

#include <cmath>
#include <complex>
#include <memory>
#include <numbers>
#include <vector>

#include "qfcs/boundary/kernel_smearing.hpp"
#include "qfcs/bulk/causal_propagator.hpp"
#include "qfcs/bulk/two_point.hpp"
#include "qfcs/harness/rng.hpp"
#include "qfcs/microlocal/wavefront.hpp"
#include "qfcs/modes/de_sitter.hpp"
#include "qfcs/modes/solver.hpp"
#include "qfcs/numeric/hankel.hpp"
#include "qfcs/tunneling/horizon_limit.hpp"
#include "qfcs/wick/star_product.hpp"

using namespace qfcs;
using cd = std::complex<double>;

static void BM_Hankel(benchmark::State& state) {
  const cd nu = state.range(0) == 0 ? cd(0.4, 0) : cd(0, 0.8);
  double x = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(numeric::hankel1(nu, x));
    x = x > 40 ? 0.1 : x * 1.3;
  }
}
BENCHMARK(BM_Hankel)->Arg(0)->Arg(1);

static void BM_SolveMode(benchmark::State& state) {
  const auto v = modes::ModePotential::de_sitter({0.4});
  const double k = static_cast<double>(state.range(0));
  std::vector<double> grid;
  for (int i = 0; i <= 2000; ++i) grid.push_back(-100 + i * (99.9 / 2000));
  for (auto _ : state) benchmark::DoNotOptimize(modes::solve_mode(v, k, grid, modes::AsymptoticVacuum{-100}));
}
BENCHMARK(BM_SolveMode)->Arg(1)->Arg(10)->Unit(benchmark::kMillisecond);

static void BM_ModeSmearingTransform(benchmark::State& state) {
  const bulk::SmearingBox box{-8, -0.5, 4};
  const bulk::ModeSmearing s(bulk::ModeFamily::de_sitter(1, {0.4}), box);
  harness::CounterRng rng(1);
  const auto f = bulk::random_test_function(rng, box);
  for (auto _ : state) benchmark::DoNotOptimize(s.transform(f));
}
BENCHMARK(BM_ModeSmearingTransform)->Unit(benchmark::kMillisecond);

static void BM_MinkowskiCausalPropagator(benchmark::State& state) {
  const bulk::SmearingBox box{-4, 4, 8};
  harness::CounterRng rng(2);
  const auto f = bulk::random_test_function(rng, box), g = bulk::random_test_function(rng, box);
  bulk::PropagatorOptions opt;
  opt.panel_width = 0.5;
  for (auto _ : state) benchmark::DoNotOptimize(bulk::minkowski_causal_propagator(f, g, opt));
}
BENCHMARK(BM_MinkowskiCausalPropagator)->Unit(benchmark::kMillisecond);

static void BM_StarProduct(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto grid = wick::FunctionalGrid::uniform(-1, 1, n);
  const auto p = wick::ProductKernel::causal(grid, [](double x, double y) { return std::sin(x - y); });
  std::vector<cd> f(n), g(n);
  for (std::size_t i = 0; i < n; ++i) {
    f[i] = std::exp(-grid->x[i] * grid->x[i]);
    g[i] = grid->x[i];
  }
  const auto a = wick::star_product(wick::Functional::linear(grid, f), wick::Functional::linear(grid, g), p);
  for (auto _ : state) benchmark::DoNotOptimize(wick::star_product(a, a, p));
}
BENCHMARK(BM_StarProduct)->Arg(8)->Arg(14)->Unit(benchmark::kMillisecond);

static void BM_WindowedSpectrum(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const double du = 0.05;
  const auto k = microlocal::SampledKernel2D::sample(-0.5 * du * n, du, n, 4 * du, [](double u, double v) {
    return -1.0 / (std::numbers::pi * std::pow(cd(u - v, -0.2), 2));
  });
  for (auto _ : state) benchmark::DoNotOptimize(microlocal::windowed_spectrum(k, {0, 0}, n / 4));
}
BENCHMARK(BM_WindowedSpectrum)->Arg(256)->Arg(512);

static void BM_SmearVacuumKernel(benchmark::State& state) {
  const auto sphere = std::make_shared<const geometry::SphereGrid>(0);
  const auto grid = boundary::UGrid::centered(8, static_cast<std::size_t>(state.range(0)));
  const auto a = boundary::BoundaryFunction::sample(grid, sphere, [](double u, const geometry::SpherePoint&) {
    return u * std::exp(-u * u);
  });
  for (auto _ : state) benchmark::DoNotOptimize(boundary::smear_vacuum_kernel(a, a));
}
BENCHMARK(BM_SmearVacuumKernel)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);

static void BM_OuterOuterLimit(benchmark::State& state) {
  const auto f = tunneling::WavePacket::concentrated(4, 1, tunneling::Side::outer, 0, 0.3);
  for (auto _ : state) benchmark::DoNotOptimize(tunneling::outer_outer_limit(f, f, 1));
}
BENCHMARK(BM_OuterOuterLimit)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
