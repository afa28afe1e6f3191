#include "qfcs/modes/de_sitter.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "qfcs/error.hpp"
#include "qfcs/numeric/hankel.hpp"

namespace qfcs::modes {

ModeValue ds_mode(double k, double tau, NuParameter nu) {
  if (!(k > 0) || !(tau < 0)) throw DomainError("ds_mode: requires k > 0 and tau < 0");
  constexpr double pi = std::numbers::pi;
  const double x = -k * tau;
  numeric::HankelValue h;
  try {
    // conj(H^(2)_nu(x)) = H^(1)_{conj nu}(x) for real x.
    h = numeric::hankel1_with_derivative(std::conj(nu.value), x);
  } catch (const Error& e) {
    std::ostringstream msg;
    msg << "ds_mode: Hankel evaluation failed at k=" << k << " tau=" << tau << " nu=" << nu.value
        << ": " << e.what();
    throw NumericError(msg.str());
  }
  const cd phase = std::exp(cd(0.0, pi * (nu.value.real() + 0.25))) *
                   std::exp(cd(0.0, -pi / 2) * nu.value) * (std::sqrt(pi) / 2);
  const double s = std::sqrt(-tau);
  return {phase * s * h.value, phase * (-0.5 / s * h.value - k * s * h.derivative)};
}

ModeFunction ds_mode_function(double k, const std::vector<double>& tau, NuParameter nu) {
  ModeFunction m;
  m.k = k;
  m.tau = tau;
  m.chi.reserve(tau.size());
  m.dchi.reserve(tau.size());
  for (double t : tau) {
    const auto v = ds_mode(k, t, nu);
    m.chi.push_back(v.chi);
    m.dchi.push_back(v.dchi);
  }
  m.tau0 = -std::numeric_limits<double>::infinity();
  return m;
}

std::vector<cd> wronskian(const ModeFunction& mode) {
  std::vector<cd> w(mode.chi.size());
  for (std::size_t i = 0; i < w.size(); ++i)
    w[i] = mode.dchi[i] * std::conj(mode.chi[i]) - mode.chi[i] * std::conj(mode.dchi[i]);
  return w;
}

double max_wronskian_drift(const ModeFunction& mode) {
  double d = 0.0;
  for (const cd w : wronskian(mode)) d = std::max(d, std::abs(w + cd(0.0, 1.0)));
  return d;
}

}  // namespace qfcs::modes
