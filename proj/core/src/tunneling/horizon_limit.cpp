#include "qfcs/tunneling/horizon_limit.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <numbers>

#include "qfcs/boundary/kernel_smearing.hpp"
#include "qfcs/error.hpp"
#include "qfcs/geometry/sphere.hpp"
#include "qfcs/numeric/parallel.hpp"
#include "qfcs/numeric/quadrature.hpp"

namespace qfcs::tunneling {

namespace {

constexpr double pi = std::numbers::pi;

// J = int_0^inf k e^{i p du} e^{-p^2 W / 2} e^{-k^2 S / 2} dk with p = c k^2.
cd transverse_integral(double c, double du, double w2, double s) {
  if (c == 0) return 1.0 / s;
  const double x_hi = std::min(80.0 / s, std::sqrt(160.0 / (c * c * w2)));
  const auto rule = numeric::composite_gauss(0.0, x_hi, 16, 8);
  cd sum = 0.0;
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const double x = rule.nodes[i];
    sum += rule.weights[i] * std::exp(cd(-0.5 * x * s - 0.5 * c * c * x * x * w2, c * x * du));
  }
  return 0.5 * sum;
}

double q_cutoff(const WavePacket& p) {
  return (p.energy + 6.0 / p.tau_width) / (p.kappa * std::exp(p.kappa * (p.tau_center - 5 * p.tau_width)));
}

double v_extent(const WavePacket& p) { return std::exp(p.kappa * (p.tau_center + 5 * p.tau_width)); }

cd neville_at_zero(std::span<const double> x, std::span<const cd> y) {
  std::vector<cd> p(y.begin(), y.end());
  const std::size_t n = p.size();
  for (std::size_t m = 1; m < n; ++m)
    for (std::size_t i = 0; i + m < n; ++i)
      p[i] = (x[i + m] * p[i] - x[i] * p[i + 1]) / (x[i + m] - x[i]);
  return p[0];
}

// Support half-extent in the tau coordinate of surface gravity kappa.
double tau_reach(const WavePacket& p, double kappa) {
  return std::max(std::abs(p.tau_lo), std::abs(p.tau_hi)) * p.kappa / kappa;
}

double spectral_reach(const WavePacket& p, double kappa) {
  return (p.energy + 10.0 / p.tau_width) * p.kappa / kappa;
}

template <class Weight>
cd spectral_integral(const WavePacket& f, const WavePacket& fp, double kappa, Weight&& weight) {
  const double e_max = std::max(spectral_reach(f, kappa), spectral_reach(fp, kappa));
  const double h = 1.0 / std::max(tau_reach(f, kappa), tau_reach(fp, kappa));
  const auto panels = static_cast<std::size_t>(std::ceil(2 * e_max / h));
  const auto rule = numeric::composite_gauss(-e_max, e_max, panels, 8);
  std::vector<cd> terms(rule.size());
  numeric::parallel_for(rule.size(), [&](std::size_t i) {
    const double e = rule.nodes[i];
    terms[i] = rule.weights[i] * weight(e) * std::conj(tau_transform(f, e, kappa)) *
               tau_transform(fp, e, kappa);
  });
  cd sum = 0.0;
  for (const cd& t : terms) sum += t;
  return sum;
}

void require_outer(const WavePacket& p, const char* where) {
  if (p.side != Side::outer)
    throw DomainError(std::string(where) + ": packet support crosses V = 0 to the inner side");
}

}  // namespace

cd scaled_correlation(const WavePacket& f, const WavePacket& fp, double lambda) {
  if (!(lambda >= 0)) throw DomainError("scaled_correlation: lambda must be non-negative");
  const double q_max = std::max(q_cutoff(f), q_cutoff(fp));
  const double dq = 1.0 / std::max(v_extent(f), v_extent(fp));
  const auto panels = static_cast<std::size_t>(std::ceil(q_max / dq));
  const auto rule = numeric::composite_gauss(0.0, q_max, panels, 8);
  const double sa = f.s_width * f.s_width, sb = fp.s_width * fp.s_width;
  const double pref = pi * f.u_width * fp.u_width * sa * sb / 4;
  const double w2 = f.u_width * f.u_width + fp.u_width * fp.u_width;
  const double du = fp.u_center - f.u_center;
  std::vector<cd> terms(rule.size());
  numeric::parallel_for(rule.size(), [&](std::size_t i) {
    const double q = rule.nodes[i];
    const cd k = pref * transverse_integral(lambda / (4 * q), du, w2, sa + sb);
    terms[i] = rule.weights[i] * q * std::conj(v_transform(f, q)) * v_transform(fp, q) * k;
  });
  cd sum = 0.0;
  for (const cd& t : terms) sum += t;
  return sum;
}

CorrelationLadder correlation_ladder(const WavePacket& f, const WavePacket& fp,
                                     std::span<const double> lambdas) {
  if (lambdas.size() < 2) throw DomainError("correlation_ladder: need at least two lambdas");
  CorrelationLadder out;
  out.lambdas.assign(lambdas.begin(), lambdas.end());
  for (double l : lambdas) {
    if (!(l > 0)) throw DomainError("correlation_ladder: lambdas must be positive");
    out.values.push_back(scaled_correlation(f, fp, l));
  }
  for (std::size_t i = 0; i + 1 < out.values.size(); ++i)
    out.steps.push_back(std::abs(out.values[i + 1] - out.values[i]));
  out.cauchy = true;
  for (std::size_t i = 0; i + 1 < out.steps.size(); ++i)
    if (out.steps[i + 1] > 0.75 * out.steps[i]) out.cauchy = false;
  out.extrapolated = neville_at_zero(out.lambdas, out.values);
  return out;
}

cd horizon_limit_boundary(const WavePacket& f, const WavePacket& fp, double dv) {
  if (!(dv > 0)) throw DomainError("horizon_limit_boundary: grid step must be positive");
  const double lo = std::min(f.v_lo(), fp.v_lo()) - 20 * dv;
  const double hi = std::max(f.v_hi(), fp.v_hi()) + 20 * dv;
  const boundary::UGrid grid{lo, dv, static_cast<std::size_t>(std::ceil((hi - lo) / dv)) + 1};
  auto sphere = std::make_shared<const geometry::SphereGrid>(0);
  double area = 0;
  for (double w : sphere->weights()) area += w;
  auto one = [](const geometry::SpherePoint&) { return cd(1.0); };
  const auto a = boundary::HorizonFunction::separable(
      grid, sphere, [&](double v) { return cd(f.v_profile(v)); }, one);
  const auto b = boundary::HorizonFunction::separable(
      grid, sphere, [&](double v) { return cd(fp.v_profile(v)); }, one);
  const auto ladder = boundary::smear_vacuum_kernel(a, b);
  return transverse_overlap(f, fp) / 16.0 * ladder.extrapolated / area;
}

double bose_weight(double energy, double beta) {
  if (energy == 0) return 1.0 / beta;
  return energy / -std::expm1(-beta * energy);
}

double cross_horizon_weight(double energy, double beta) {
  if (energy == 0) return 2.0 / beta;
  return energy / std::sinh(0.5 * beta * energy);
}

double cross_horizon_kernel_transform(double energy, double kappa) {
  if (!(kappa > 0)) throw DomainError("cross_horizon_kernel_transform: kappa must be positive");
  const double x_hi = 42.0 / kappa;
  const double h = std::min(0.5 / kappa, 1.0 / std::max(std::abs(energy), 1e-300));
  const auto rule = numeric::composite_gauss(0.0, x_hi, static_cast<std::size_t>(std::ceil(x_hi / h)), 8);
  double sum = 0;
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const double x = rule.nodes[i];
    const double c = std::cosh(0.5 * kappa * x);
    sum += rule.weights[i] * kappa * kappa / (4 * c * c) * std::cos(energy * x);
  }
  return 2 * sum;
}

cd SpectralTable::integrated() const {
  cd sum = 0.0;
  for (std::size_t i = 0; i + 1 < energy.size(); ++i)
    sum += 0.5 * (energy[i + 1] - energy[i]) * (density[i] + density[i + 1]);
  return transverse / (16 * pi) * sum;
}

double SpectralTable::fitted_beta() const {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::size_t n = 0;
  const std::size_t m = energy.size();
  for (std::size_t i = 0; i < m; ++i) {
    const double e = energy[i];
    if (!(e > 0)) continue;
    const double y = std::log(bose[i] / bose[m - 1 - i]);
    sx += e, sy += y, sxx += e * e, sxy += e * y;
    ++n;
  }
  if (n < 2) throw DomainError("SpectralTable::fitted_beta: need two positive energies");
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

SpectralTable outer_outer_spectrum(const WavePacket& f, const WavePacket& fp, double kappa,
                                   const SpectrumOptions& opt) {
  require_outer(f, "outer_outer_spectrum");
  require_outer(fp, "outer_outer_spectrum");
  if (opt.points < 3) throw DomainError("outer_outer_spectrum: need at least three points");
  SpectralTable t;
  t.kappa = kappa;
  t.beta = hawking_beta(kappa);
  t.transverse = transverse_overlap(f, fp);
  const double e_max =
      opt.e_max > 0 ? opt.e_max : std::max(spectral_reach(f, kappa), spectral_reach(fp, kappa));
  const std::size_t n = opt.points;
  t.energy.resize(n);
  t.bose.resize(n);
  t.overlap.resize(n);
  t.density.resize(n);
  numeric::parallel_for(n, [&](std::size_t i) {
    const double e = -e_max + 2 * e_max * static_cast<double>(i) / static_cast<double>(n - 1);
    t.energy[i] = i == (n - 1) / 2 && n % 2 == 1 ? 0.0 : e;
    t.bose[i] = bose_weight(t.energy[i], t.beta);
    t.overlap[i] = std::conj(tau_transform(f, t.energy[i], kappa)) * tau_transform(fp, t.energy[i], kappa);
    t.density[i] = t.bose[i] * t.overlap[i];
  });
  return t;
}

cd outer_outer_limit(const WavePacket& f, const WavePacket& fp, double kappa) {
  require_outer(f, "outer_outer_limit");
  require_outer(fp, "outer_outer_limit");
  const double beta = hawking_beta(kappa);
  return transverse_overlap(f, fp) / (16 * pi) *
         spectral_integral(f, fp, kappa, [&](double e) { return bose_weight(e, beta); });
}

cd cross_horizon_limit(const WavePacket& inner, const WavePacket& outer) {
  if (inner.side != Side::inner || outer.side != Side::outer)
    throw DomainError("cross_horizon_limit: expects an inner and an outer packet");
  if (inner.kappa != outer.kappa)
    throw DomainError("cross_horizon_limit: packets built for different surface gravities");
  const double beta = inner.beta();
  return -transverse_overlap(inner, outer) / (32 * pi) *
         spectral_integral(inner, outer, inner.kappa,
                           [&](double e) { return cross_horizon_weight(e, beta); });
}

cd cross_horizon_limit_direct(const WavePacket& inner, const WavePacket& outer) {
  if (inner.side != Side::inner || outer.side != Side::outer)
    throw DomainError("cross_horizon_limit_direct: expects an inner and an outer packet");
  struct Node {
    double v, w;
  };
  auto nodes = [](const WavePacket& p) {
    const double h = std::min(0.25 * p.tau_width, 2.5 / std::max(p.energy, 1e-300));
    const auto rule = numeric::composite_gauss(
        p.tau_lo, p.tau_hi, static_cast<std::size_t>(std::ceil((p.tau_hi - p.tau_lo) / h)), 8);
    std::vector<Node> out(rule.size());
    for (std::size_t i = 0; i < rule.size(); ++i) {
      const double v = p.v_of_tau(rule.nodes[i]);
      out[i] = {v, rule.weights[i] * p.kappa * std::abs(v) * p.v_profile(v)};
    }
    return out;
  };
  const auto a = nodes(inner), b = nodes(outer);
  std::vector<double> rows(a.size());
  numeric::parallel_for(a.size(), [&](std::size_t i) {
    double s = 0;
    for (const auto& nb : b) {
      const double d = a[i].v - nb.v;
      s += nb.w / (d * d);
    }
    rows[i] = a[i].w * s;
  });
  double sum = 0;
  for (double r : rows) sum += r;
  return -transverse_overlap(inner, outer) / (16 * pi) * sum;
}

TunnelingEstimate tunneling_estimate(std::span<const double> energies, double kappa,
                                     const TunnelingOptions& opt) {
  if (energies.size() < 2) throw DomainError("tunneling_estimate: need at least two energies");
  TunnelingEstimate out;
  out.kappa = kappa;
  out.beta = hawking_beta(kappa);
  const double sigma = opt.sigma_tau > 0 ? opt.sigma_tau : 2 * out.beta;
  out.energies.assign(energies.begin(), energies.end());
  out.values.resize(energies.size());
  for (std::size_t i = 0; i < energies.size(); ++i) {
    const double e0 = energies[i];
    if (!(e0 > 0)) throw DomainError("tunneling_estimate: energies must be positive");
    const auto in = WavePacket::concentrated(e0, kappa, Side::inner, opt.tau_center, sigma);
    const auto outp = WavePacket::concentrated(e0, kappa, Side::outer, opt.tau_center, sigma);
    out.values[i] = std::norm(cross_horizon_limit(in, outp));
  }
  const std::size_t n = energies.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::vector<double> y(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double e = out.energies[i];
    y[i] = std::log(out.values[i] / (e * e));
    sx += e, sy += y[i], sxx += e * e, sxy += e * y[i];
  }
  const double dn = static_cast<double>(n);
  out.fitted_slope = (dn * sxy - sx * sy) / (dn * sxx - sx * sx);
  out.intercept = (sy - out.fitted_slope * sx) / dn;
  out.poor_concentration = false;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = std::expm1(y[i] - out.intercept - out.fitted_slope * out.energies[i]);
    out.residuals.push_back(r);
    if (std::abs(r) > opt.residual_warning) out.poor_concentration = true;
  }
  return out;
}

}  // namespace qfcs::tunneling
