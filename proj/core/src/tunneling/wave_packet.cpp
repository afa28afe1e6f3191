#include "qfcs/tunneling/wave_packet.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qfcs/error.hpp"
#include "qfcs/numeric/quadrature.hpp"

namespace qfcs::tunneling {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double cut = 8.0;

const numeric::GaussRule& rule8() {
  static const numeric::GaussRule r = numeric::gauss_legendre(8);
  return r;
}

// Adaptive Gauss-8 panels in tau; step(tau) bounds the local panel width.
template <class F, class Step>
cd panel_sum(double lo, double hi, F&& integrand, Step&& step) {
  const auto& r = rule8();
  cd sum = 0.0;
  double a = lo;
  while (a < hi) {
    const double b = std::min(hi, a + step(a));
    const double half = 0.5 * (b - a), mid = 0.5 * (a + b);
    for (std::size_t i = 0; i < r.size(); ++i) sum += half * r.weights[i] * integrand(mid + half * r.nodes[i]);
    a = b;
  }
  return sum;
}

}  // namespace

double hawking_beta(double kappa) {
  if (!(kappa > 0)) throw DomainError("hawking_beta: surface gravity must be positive");
  return 2 * pi / kappa;
}

double WavePacket::v_of_tau(double tau) const { return sign() * std::exp(kappa * tau); }

double WavePacket::tau_of_v(double v) const {
  if (!(sign() * v > 0)) throw DomainError("WavePacket: V on the wrong side of the horizon");
  return std::log(std::abs(v)) / kappa;
}

double WavePacket::v_profile(double v) const {
  if (!(sign() * v > 0)) return 0.0;
  const double tau = std::log(std::abs(v)) / kappa;
  return tau <= tau_lo || tau >= tau_hi ? 0.0 : profile(tau);
}

double WavePacket::v_profile_derivative(double v) const {
  if (!(sign() * v > 0)) return 0.0;
  const double tau = std::log(std::abs(v)) / kappa;
  return tau <= tau_lo || tau >= tau_hi ? 0.0 : profile_derivative(tau) / (kappa * v);
}

double WavePacket::u_profile(double u) const {
  const double x = (u - u_center) / u_width;
  return std::abs(x) < cut ? std::exp(-0.5 * x * x) : 0.0;
}

double WavePacket::s_profile(double s) const {
  const double x = s / s_width;
  return x < cut ? std::exp(-0.5 * x * x) : 0.0;
}

double WavePacket::primitive(double v, double u, double s) const {
  return v_profile(v) * u_profile(u) * s_profile(s);
}

double WavePacket::test_function(double v, double u, double s) const {
  return v_profile_derivative(v) * u_profile(u) * s_profile(s);
}

double WavePacket::v_lo() const { return std::min(v_of_tau(tau_lo), v_of_tau(tau_hi)); }
double WavePacket::v_hi() const { return std::max(v_of_tau(tau_lo), v_of_tau(tau_hi)); }

WavePacket WavePacket::concentrated(double e0, double kappa, Side side, double tau_center,
                                    double sigma_tau) {
  if (!(kappa > 0) || !(sigma_tau > 0) || !(e0 >= 0))
    throw DomainError("WavePacket::concentrated: need kappa > 0, sigma > 0, E0 >= 0");
  const double floor = std::exp(-0.5 * cut * cut);
  WavePacket p;
  p.profile = [=](double tau) {
    const double x = (tau - tau_center) / sigma_tau;
    if (std::abs(x) >= cut) return 0.0;
    return (std::exp(-0.5 * x * x) - floor) * std::cos(e0 * (tau - tau_center));
  };
  p.profile_derivative = [=](double tau) {
    const double x = (tau - tau_center) / sigma_tau;
    if (std::abs(x) >= cut) return 0.0;
    const double g = std::exp(-0.5 * x * x);
    const double ph = e0 * (tau - tau_center);
    return -x / sigma_tau * g * std::cos(ph) - e0 * (g - floor) * std::sin(ph);
  };
  p.tau_lo = tau_center - cut * sigma_tau;
  p.tau_hi = tau_center + cut * sigma_tau;
  p.tau_center = tau_center;
  p.tau_width = sigma_tau;
  p.side = side;
  p.kappa = kappa;
  p.energy = e0;
  return p;
}

double transverse_overlap(const WavePacket& a, const WavePacket& b) {
  const double sa = a.s_width * a.s_width, sb = b.s_width * b.s_width;
  return 2 * pi * a.u_width * b.u_width * 2 * pi * sa * sb / (sa + sb);
}

cd tau_transform(const WavePacket& p, double energy) {
  const double rate = std::abs(energy) + p.energy;
  return panel_sum(
      p.tau_lo, p.tau_hi,
      [&](double tau) { return p.profile(tau) * std::exp(cd(0, energy * tau)); },
      [&](double) { return std::min(0.25 * p.tau_width, 2.0 / std::max(rate, 1e-300)); });
}

cd tau_transform(const WavePacket& p, double energy, double kappa) {
  if (!(kappa > 0)) throw DomainError("tau_transform: surface gravity must be positive");
  const double r = p.kappa / kappa;
  return r * tau_transform(p, energy * r);
}

cd v_transform(const WavePacket& p, double q) {
  const double s = p.sign();
  return panel_sum(
      p.tau_lo, p.tau_hi,
      [&](double tau) {
        const double v = std::exp(p.kappa * tau);
        return p.profile(tau) * p.kappa * v * std::exp(cd(0, q * s * v));
      },
      [&](double tau) {
        const double rate = std::abs(q) * p.kappa * std::exp(p.kappa * tau) + p.energy;
        return std::min(0.25 * p.tau_width, 2.5 / std::max(rate, 1e-300));
      });
}

ScalingFamily ScalingFamily::geometric(WavePacket base, double first, double ratio,
                                       std::size_t count) {
  if (!(first > 0) || !(ratio > 0) || !(ratio < 1) || count == 0)
    throw DomainError("ScalingFamily::geometric: need first > 0, 0 < ratio < 1, count > 0");
  ScalingFamily fam{std::move(base), {}};
  double l = first;
  for (std::size_t i = 0; i < count; ++i, l *= ratio) fam.lambdas.push_back(l);
  return fam;
}

double ScalingFamily::test_function(std::size_t i, double v, double u, double s) const {
  const double l = lambdas.at(i);
  return base.test_function(v / l, u, s) / l;
}

}  // namespace qfcs::tunneling
