#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "qfcs/error.hpp"
#include "qfcs/numeric/quadrature.hpp"
#include "qfcs/tunneling/horizon_limit.hpp"

using namespace qfcs;
using namespace qfcs::tunneling;
using std::numbers::pi;

TEST(Weights, HawkingBetaAndDetailedBalance) {
  EXPECT_DOUBLE_EQ(hawking_beta(0.25), 8 * pi);
  const double beta = 3.0;
  EXPECT_DOUBLE_EQ(bose_weight(0, beta), 1 / beta);
  EXPECT_DOUBLE_EQ(cross_horizon_weight(0, beta), 2 / beta);
  for (double e : {0.1, 1.0, 4.0}) {
    EXPECT_NEAR(bose_weight(e, beta) / bose_weight(-e, beta), std::exp(beta * e), 1e-12 * std::exp(beta * e));
    EXPECT_DOUBLE_EQ(cross_horizon_weight(e, beta), cross_horizon_weight(-e, beta));
    // E / sinh(beta E / 2) is the geometric mean of the two Bose weights.
    EXPECT_NEAR(cross_horizon_weight(e, beta), 2 * std::sqrt(bose_weight(e, beta) * bose_weight(-e, beta)), 1e-13);
  }
}

TEST(Weights, KernelTransform) {
  for (double kappa : {0.5, 1.0})
    for (double e : {0.0, 0.7, 3.0})
      EXPECT_NEAR(cross_horizon_kernel_transform(e, kappa), pi * cross_horizon_weight(e, 2 * pi / kappa), 1e-7);
}

TEST(WavePacket, ChartMapsAndSides) {
  const auto out = WavePacket::concentrated(3, 0.5, Side::outer, 0.4, 1.0);
  const auto in = WavePacket::concentrated(3, 0.5, Side::inner, 0.4, 1.0);
  for (double tau : {-2.0, 0.4, 3.0}) {
    EXPECT_NEAR(out.tau_of_v(out.v_of_tau(tau)), tau, 1e-13);
    EXPECT_NEAR(in.tau_of_v(in.v_of_tau(tau)), tau, 1e-13);
    EXPECT_GT(out.v_of_tau(tau), 0);
    EXPECT_LT(in.v_of_tau(tau), 0);
  }
  EXPECT_THROW(out.tau_of_v(-1), DomainError);
  EXPECT_THROW(in.tau_of_v(1), DomainError);
  EXPECT_LT(out.v_lo(), out.v_hi());
  EXPECT_THROW(WavePacket::concentrated(3, 0, Side::outer, 0, 1), DomainError);
}

TEST(WavePacket, ProfileTransformClosedForm) {
  const double e0 = 4, s = 0.3, tc = 0.2;
  const auto p = WavePacket::concentrated(e0, 1.0, Side::outer, tc, s);
  for (double e : {-4.0, -1.0, 0.0, 2.5, 4.0, 7.0}) {
    // Gaussian part plus the constant-floor correction over |x| < 8.
    const double gauss = s * std::sqrt(2 * pi) * 0.5 *
                         (std::exp(-0.5 * (e + e0) * (e + e0) * s * s) + std::exp(-0.5 * (e - e0) * (e - e0) * s * s));
    auto sinc8 = [&](double q) { return std::abs(q) < 1e-12 ? 8.0 : std::sin(8 * q * s) / (q * s); };
    const double floor = std::exp(-32.0) * s * (sinc8(e + e0) + sinc8(e - e0));
    const cd ref = std::polar(gauss - floor, e * tc);
    EXPECT_LT(std::abs(tau_transform(p, e) - ref), 1e-12) << e;
  }
}

TEST(WavePacket, TransverseOverlapByQuadrature) {
  auto a = WavePacket::concentrated(2, 1, Side::outer, 0, 0.5);
  auto b = a;
  b.u_center = 1.4;
  b.u_width = 0.4;
  b.s_width = 0.8;
  auto ia = numeric::integrate([&](double u) { return a.u_profile(u); }, -3, 5);
  auto ib = numeric::integrate([&](double u) { return b.u_profile(u); }, -3, 5);
  auto cc = numeric::integrate([&](double r) { return 2 * pi * r * a.s_profile(r) * b.s_profile(r); }, 0, 8);
  EXPECT_NEAR(transverse_overlap(a, b), ia * ib * cc, 1e-10 * ia * ib * cc);
}

TEST(HorizonLimit, MomentumAndSpectralPathsAgree) {
  const auto f = WavePacket::concentrated(4, 1, Side::outer, 0, 0.3);
  auto g = WavePacket::concentrated(4, 1, Side::outer, 0.2, 0.3);
  g.u_center += 0.3;
  const cd direct = scaled_correlation(f, g, 0), spectral = outer_outer_limit(f, g, 1);
  EXPECT_LT(std::abs(direct - spectral) / std::abs(spectral), 1e-6);
  // Positivity on the diagonal.
  EXPECT_GT(outer_outer_limit(f, f, 1).real(), 0);
  EXPECT_NEAR(outer_outer_limit(f, f, 1).imag(), 0, 1e-12 * std::abs(outer_outer_limit(f, f, 1)));
}

TEST(HorizonLimit, SpectrumIsThermalAtTheHawkingTemperature) {
  const double kappa = 0.7;
  const auto f = WavePacket::concentrated(2, kappa, Side::outer, 0, 1.0);
  const auto t = outer_outer_spectrum(f, f, kappa);
  EXPECT_NEAR(t.fitted_beta(), hawking_beta(kappa), 1e-9 * hawking_beta(kappa));
  const cd integrated = t.integrated(), limit = outer_outer_limit(f, f, kappa);
  EXPECT_LT(std::abs(integrated - limit) / std::abs(limit), 1e-6);
  const auto in = WavePacket::concentrated(2, kappa, Side::inner, 0, 1.0);
  EXPECT_THROW(outer_outer_spectrum(in, f, kappa), DomainError);
}

TEST(HorizonLimit, CrossHorizonSpectralMatchesDirect) {
  const auto in = WavePacket::concentrated(3, 1, Side::inner, 0, 0.4);
  const auto out = WavePacket::concentrated(3, 1, Side::outer, 0.1, 0.4);
  const cd s = cross_horizon_limit(in, out), d = cross_horizon_limit_direct(in, out);
  EXPECT_LT(std::abs(s - d) / std::abs(d), 1e-4);
  EXPECT_THROW(cross_horizon_limit(out, in), DomainError);
}

TEST(Tunneling, SlopeIsMinusTheInverseTemperature) {
  const double kappa = 0.5, beta = hawking_beta(kappa);
  std::vector<double> energies;
  for (double x : {4.0, 6.0, 8.0, 10.0}) energies.push_back(x / beta);
  const auto est = tunneling_estimate(energies, kappa);
  EXPECT_NEAR(est.fitted_slope / -beta, 1.0, 0.05);
  EXPECT_FALSE(est.poor_concentration);
  for (std::size_t i = 1; i < est.values.size(); ++i) EXPECT_LT(est.values[i], est.values[i - 1]);
}
