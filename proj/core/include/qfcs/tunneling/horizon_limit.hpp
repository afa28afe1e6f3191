#pragma once

#include <span>
#include <vector>

#include "qfcs/tunneling/wave_packet.hpp"

namespace qfcs::tunneling {

// omega_2(f_lambda, f'_lambda) in the Minkowski vacuum written on the near-horizon chart
// (volume element dU dV d^2 s / 2), evaluated in light-cone momenta. lambda = 0 gives
// the limit -(1/16 pi) int F F' / (V - V' - i eps)^2 dU dV dU' dV' d^2 s.
cd scaled_correlation(const WavePacket& f, const WavePacket& fp, double lambda);

struct CorrelationLadder {
  std::vector<double> lambdas;
  std::vector<cd> values;
  std::vector<double> steps;  // |values[i + 1] - values[i]|
  cd extrapolated;            // polynomial extrapolation to lambda = 0
  bool cauchy;                // every step at most 3/4 of the previous one
};

CorrelationLadder correlation_ladder(const WavePacket& f, const WavePacket& fp,
                                     std::span<const double> lambdas);

// The same limit through the boundary-states kernel smearing on a uniform V-grid.
cd horizon_limit_boundary(const WavePacket& f, const WavePacket& fp, double dv);

// E / (1 - e^{-beta E}), with the value 1 / beta at E = 0.
double bose_weight(double energy, double beta);
// E / sinh(beta E / 2), with the value 2 / beta at E = 0.
double cross_horizon_weight(double energy, double beta);
// int kappa^2 / (4 cosh^2(kappa x / 2)) e^{i E x} dx by quadrature; equals
// pi cross_horizon_weight(E, 2 pi / kappa).
double cross_horizon_kernel_transform(double energy, double kappa);

struct SpectralTable {
  double kappa;
  double beta;
  double transverse;
  std::vector<double> energy;
  std::vector<double> bose;
  std::vector<cd> overlap;  // conj(F_hat(E)) F'_hat(E), transforms along log(V) / kappa
  std::vector<cd> density;  // bose * overlap

  // (transverse / 16 pi) int density dE on the table grid.
  cd integrated() const;
  // Least-squares slope of log(bose(E) / bose(-E)) over E > 0.
  double fitted_beta() const;
};

struct SpectrumOptions {
  std::size_t points = 801;  // symmetric grid over [-e_max, e_max]
  double e_max = 0;          // 0: from the packet energies and widths
};

// Both packets outside the horizon; DomainError otherwise.
SpectralTable outer_outer_spectrum(const WavePacket& f, const WavePacket& fp, double kappa,
                                   const SpectrumOptions& opt = {});

// (transverse / 16 pi) int bose(E) conj(F_hat) F'_hat dE by Gauss panels.
cd outer_outer_limit(const WavePacket& f, const WavePacket& fp, double kappa);

// Inner f, outer f': -(transverse / 32 pi) int E / sinh(beta E / 2) conj(F_hat) F'_hat dE.
cd cross_horizon_limit(const WavePacket& inner, const WavePacket& outer);
// The same quantity by direct quadrature of -(1/16 pi) int F F' / (V - V')^2.
cd cross_horizon_limit_direct(const WavePacket& inner, const WavePacket& outer);

struct TunnelingOptions {
  double sigma_tau = 0;  // 0: twice the inverse Hawking temperature
  double tau_center = 0;
  double residual_warning = 0.1;
};

struct TunnelingEstimate {
  double kappa;
  double beta;
  std::vector<double> energies;
  std::vector<double> values;     // |omega_2|^2 in the limit
  std::vector<double> residuals;  // relative deviation of each value from the fit
  double fitted_slope;
  double intercept;
  bool poor_concentration;
};

TunnelingEstimate tunneling_estimate(std::span<const double> energies, double kappa,
                                     const TunnelingOptions& opt = {});

}  // namespace qfcs::tunneling
