#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace qfcs::tunneling {

using cd = std::complex<double>;

// Outer packets live at V > 0, inner packets at V < 0; the horizon is V = 0.
enum class Side { outer, inner };

double hawking_beta(double kappa);

// Primitive F(V, U, s) = A(V) B(U) C(|s|) on the near-horizon chart
// -dU dV + ds^2, with A(V) = g(log|V| / kappa) and Gaussian B, C.
// The test function is f = dF/dV.
struct WavePacket {
  std::function<double(double)> profile;  // g(tau), zero outside [tau_lo, tau_hi]
  std::function<double(double)> profile_derivative;
  double tau_lo;
  double tau_hi;
  double tau_center;
  double tau_width;
  Side side;
  double kappa;
  double energy;
  double u_center = 1.0;
  double u_width = 0.25;
  double s_width = 0.5;

  double beta() const { return hawking_beta(kappa); }
  double sign() const { return side == Side::outer ? 1.0 : -1.0; }
  double v_of_tau(double tau) const;
  // DomainError for V on the wrong side of the horizon.
  double tau_of_v(double v) const;

  double v_profile(double v) const;
  double v_profile_derivative(double v) const;
  double u_profile(double u) const;
  double s_profile(double s) const;

  double primitive(double v, double u, double s) const;
  double test_function(double v, double u, double s) const;

  // V-range of the support, ordered.
  double v_lo() const;
  double v_hi() const;

  // (exp(-x^2/2) - exp(-32)) cos(E0 (tau - tau_c)) for |x| = |tau - tau_c| / sigma < 8.
  // Vanishes exactly at the ends of its support.
  static WavePacket concentrated(double e0, double kappa, Side side, double tau_center,
                                 double sigma_tau);
};

// int B dU int B' dU' int C C' d^2 s.
double transverse_overlap(const WavePacket& a, const WavePacket& b);

// int g(tau) e^{i E tau} d tau.
cd tau_transform(const WavePacket& p, double energy);
// Transform along tau = log|V| / kappa for a surface gravity other than the packet's own.
cd tau_transform(const WavePacket& p, double energy, double kappa);
// int A(V) e^{i q V} dV.
cd v_transform(const WavePacket& p, double q);

// f_lambda(V, ...) = f(V / lambda, ...) / lambda over a geometric schedule.
struct ScalingFamily {
  WavePacket base;
  std::vector<double> lambdas;

  static ScalingFamily geometric(WavePacket base, double first = 1.0, double ratio = 0.5,
                                 std::size_t count = 4);
  double test_function(std::size_t i, double v, double u, double s) const;
};

}  // namespace qfcs::tunneling
