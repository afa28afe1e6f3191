#include "qfcs/bulk/two_point.hpp"

#include <algorithm>
#include <boost/math/special_functions/bessel.hpp>
#include <cmath>
#include <numbers>

#include "qfcs/error.hpp"
#include "qfcs/modes/de_sitter.hpp"
#include "qfcs/numeric/parallel.hpp"

namespace qfcs::bulk {

namespace {

constexpr double pi = std::numbers::pi;
constexpr cd I{0.0, 1.0};

double sinc(double x) { return std::abs(x) < 1e-4 ? 1 - x * x / 6 * (1 - x * x / 20) : std::sin(x) / x; }

// Panels on [0, k_max] of width at most `width`; the first panel is refined dyadically
// toward k = 0 where mode integrands are not analytic.
numeric::GaussRule k_rule(double k_max, double width, std::size_t order) {
  numeric::GaussRule rule;
  auto add = [&](double lo, double hi) {
    const auto g = numeric::gauss_legendre(order, lo, hi);
    rule.nodes.insert(rule.nodes.end(), g.nodes.begin(), g.nodes.end());
    rule.weights.insert(rule.weights.end(), g.weights.begin(), g.weights.end());
  };
  const auto panels = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(k_max / width)));
  const double h = k_max / static_cast<double>(panels);
  constexpr int levels = 12;
  add(0.0, std::ldexp(h, -levels));
  for (int m = levels; m >= 1; --m) add(std::ldexp(h, -m), std::ldexp(h, -m + 1));
  for (std::size_t p = 1; p < panels; ++p) add(h * static_cast<double>(p), h * static_cast<double>(p + 1));
  return rule;
}

double oscillation_width(double rate) { return std::min(0.5, pi / (4 * std::max(rate, 1e-300))); }

std::pair<cd, cd> mode_pair(const ModeFamily& modes, double k, double t, double tp) {
  if (t == tp) {
    const auto v = modes.values(k, {t});
    return {v[0], v[0]};
  }
  if (t < tp) {
    const auto v = modes.values(k, {t, tp});
    return {v[0], v[1]};
  }
  const auto v = modes.values(k, {tp, t});
  return {v[1], v[0]};
}

struct KPlan {
  double k_max;
  double width;
};

KPlan plan(const KGridOptions& opt, double eps, double rate) {
  double k_max = opt.k_max > 0 ? opt.k_max : (eps > 0 ? std::min(40.0 / eps, opt.k_cap) : opt.k_cap);
  if (opt.panels > 0) {
    const double width = k_max / static_cast<double>(opt.panels);
    if (width * rate > pi / 4)
      throw AccuracyError("k-grid oscillation per panel " + std::to_string(width * rate) + " exceeds pi/4");
    return {k_max, width};
  }
  return {k_max, oscillation_width(rate)};
}

cd remainder_integral(const ModeFamily& modes, double t, double tp, double r, double eps, const KGridOptions& opt) {
  const double dt = t - tp;
  const auto p = plan(opt, eps, std::abs(dt) + r);
  const auto rule = k_rule(p.k_max, p.width, opt.order);
  cd sum = 0;
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const double k = rule.nodes[i];
    const auto [m, mp] = mode_pair(modes, k, t, tp);
    const cd flat = std::exp(-I * k * dt) / (2 * k);
    sum += rule.weights[i] * k * k * sinc(k * r) * (m * std::conj(mp) - flat) * std::exp(-eps * k);
  }
  return sum;
}

}  // namespace

double spatial_distance(const SpacetimePoint& p, const SpacetimePoint& q) {
  return std::hypot(p.x[0] - q.x[0], p.x[1] - q.x[1], p.x[2] - q.x[2]);
}

TwoPointKernel minkowski_vacuum_2pt() {
  return {"minkowskiVacuum", "minkowski", [](const SpacetimePoint& p, const SpacetimePoint& q, double eps) {
            const double r = spatial_distance(p, q);
            const cd d = p.t - q.t - I * eps;
            return 1.0 / (4 * pi * pi * (r * r - d * d));
          }};
}

TwoPointKernel minkowski_thermal_2pt(double beta) {
  if (!(beta > 0)) throw DomainError("thermal kernel: beta must be positive");
  return {"minkowskiThermal", "minkowski", [beta](const SpacetimePoint& p, const SpacetimePoint& q, double eps) {
            const double r = spatial_distance(p, q);
            const cd d = p.t - q.t - I * eps;
            const double a = pi / beta;
            if (r < 1e-7 * (std::abs(d) + 1e-300)) {
              const cd s = std::sinh(a * d);
              return -1.0 / (4 * beta * beta * s * s);
            }
            auto coth = [](cd z) { return std::cosh(z) / std::sinh(z); };
            return (coth(a * (r - d)) + coth(a * (r + d))) / (8 * pi * beta * r);
          }};
}

TwoPointKernel massive_minkowski_2pt(double mass) {
  if (!(mass > 0)) throw DomainError("massive kernel: mass must be positive");
  return {"minkowskiMassiveVacuum", "minkowski",
          [mass](const SpacetimePoint& p, const SpacetimePoint& q, double eps) -> cd {
            if (eps != 0.0) throw DomainError("massive kernel: only spacelike evaluation (eps = 0) is supported");
            const double r = spatial_distance(p, q), dt = p.t - q.t;
            const double s2 = r * r - dt * dt;
            if (!(s2 > 0)) throw DomainError("massive kernel: points are not spacelike separated");
            const double s = std::sqrt(s2);
            return mass * boost::math::cyl_bessel_k(1, mass * s) / (4 * pi * pi * s);
          }};
}

ModeFamily ModeFamily::minkowski() {
  return {"minkowski", [](double) { return 1.0; },
          [](double k, const std::vector<double>& taus) {
            std::vector<cd> out;
            out.reserve(taus.size());
            for (double t : taus) out.push_back(std::exp(-I * k * t) / std::sqrt(2 * k));
            return out;
          }};
}

ModeFamily ModeFamily::de_sitter(double hubble, modes::NuParameter nu) {
  if (!(hubble > 0)) throw DomainError("de Sitter modes: Hubble rate must be positive");
  return {"deSitter",
          [hubble](double tau) {
            if (!(tau < 0)) throw DomainError("de Sitter modes: conformal time must be negative");
            return -1.0 / (hubble * tau);
          },
          [nu](double k, const std::vector<double>& taus) {
            std::vector<cd> out;
            out.reserve(taus.size());
            for (double t : taus) out.push_back(modes::ds_mode(k, t, nu).chi);
            return out;
          }};
}

ModeFamily ModeFamily::solved(const geometry::CosmologyModel& model, modes::ModePotential potential, double tau0,
                              modes::SolverOptions options) {
  return {"solved", [model](double tau) { return model.a(tau); },
          [potential = std::move(potential), tau0, options](double k, const std::vector<double>& taus) {
            return modes::solve_mode(potential, k, taus, modes::AsymptoticVacuum{tau0}, options).chi;
          }};
}

cd frw_two_point(const ModeFamily& modes, const SpacetimePoint& p, const SpacetimePoint& q, double eps,
                 const KGridOptions& opt) {
  if (eps < 0) throw DomainError("frw_two_point: eps must be non-negative");
  const double r = spatial_distance(p, q);
  const cd d = p.t - q.t - I * eps;
  if (r == 0.0 && d == 0.0) throw DomainError("frw_two_point: coincident points need eps > 0");
  const cd flat = 1.0 / (2.0 * (r * r - d * d));
  const cd rest = remainder_integral(modes, p.t, q.t, r, eps, opt);
  return (flat + rest) / (2 * pi * pi * modes.a(p.t) * modes.a(q.t));
}

cd frw_thermal_two_point(const ModeFamily& modes, double beta, const SpacetimePoint& p, const SpacetimePoint& q,
                         double eps, const KGridOptions& opt) {
  if (!(beta > 0)) throw DomainError("frw_thermal_two_point: beta must be positive");
  if (!(eps < beta)) throw DomainError("frw_thermal_two_point: eps must be below beta");
  const cd vac = frw_two_point(modes, p, q, eps, opt);
  const double r = spatial_distance(p, q);
  KGridOptions thermal = opt;
  thermal.k_max = 46.0 / (beta - eps);
  thermal.panels = 0;
  const auto kp = plan(thermal, eps, std::abs(p.t - q.t) + r);
  const auto rule = k_rule(kp.k_max, kp.width, opt.order);
  cd sum = 0;
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const double k = rule.nodes[i];
    const auto [m, mp] = mode_pair(modes, k, p.t, q.t);
    const cd pair = m * std::conj(mp);
    sum += rule.weights[i] * k * k * sinc(k * r) * (pair * std::exp(-eps * k) + std::conj(pair) * std::exp(eps * k)) /
           std::expm1(beta * k);
  }
  return vac + sum / (2 * pi * pi * modes.a(p.t) * modes.a(q.t));
}

TwoPointKernel frw_vacuum_kernel(ModeFamily modes, KGridOptions opt) {
  auto name = modes.name;
  return {"frwVacuum", name, [modes = std::move(modes), opt](const SpacetimePoint& p, const SpacetimePoint& q,
                                                              double eps) { return frw_two_point(modes, p, q, eps, opt); }};
}

TwoPointKernel frw_thermal_kernel(ModeFamily modes, double beta, KGridOptions opt) {
  if (!(beta > 0)) throw DomainError("frw_thermal_kernel: beta must be positive");
  auto name = modes.name;
  return {"frwThermal", name,
          [modes = std::move(modes), beta, opt](const SpacetimePoint& p, const SpacetimePoint& q, double eps) {
            return frw_thermal_two_point(modes, beta, p, q, eps, opt);
          }};
}

ModeSmearing::ModeSmearing(ModeFamily modes, SmearingBox box, double k_max)
    : modes_(std::move(modes)), box_(box) {
  if (!(k_max > 0)) throw DomainError("ModeSmearing: k_max must be positive");
  // phase k * panel width stays below 3 up to k_max
  const double panel = 3.0 / k_max;
  auto panels = [panel](double len) { return static_cast<std::size_t>(std::ceil(len / panel)); };
  t_rule_ = numeric::composite_gauss(box.t_lo, box.t_hi, panels(box.t_hi - box.t_lo), 8);
  r_rule_ = numeric::composite_gauss(0.0, box.r_hi, panels(box.r_hi), 8);
  const double rate = (box.t_hi - box.t_lo) + 2 * box.r_hi;
  const auto rule = k_rule(k_max, oscillation_width(rate), 8);
  k_ = rule.nodes;
  kw_ = rule.weights;
  const std::size_t nk = k_.size(), nt = t_rule_.size(), nr = r_rule_.size();
  std::vector<double> a3(nt);
  for (std::size_t i = 0; i < nt; ++i) a3[i] = std::pow(modes_.a(t_rule_.nodes[i]), 3);
  time_weight_.resize(nk * nt);
  radial_weight_.resize(nk * nr);
  numeric::parallel_for(nk, [&](std::size_t q) {
    const auto values = modes_.values(k_[q], t_rule_.nodes);
    for (std::size_t i = 0; i < nt; ++i) time_weight_[q * nt + i] = t_rule_.weights[i] * a3[i] * values[i];
    for (std::size_t j = 0; j < nr; ++j) {
      const double r = r_rule_.nodes[j];
      radial_weight_[q * nr + j] = r_rule_.weights[j] * 4 * pi * r * r * sinc(k_[q] * r);
    }
  });
}

ModeTransform ModeSmearing::transform(const RadialTestFunction& f) const {
  if (!box_.contains(f)) throw DomainError("ModeSmearing: test function support leaves the smearing box");
  const std::size_t nk = k_.size(), nt = t_rule_.size(), nr = r_rule_.size();
  const auto r_end = static_cast<std::size_t>(
      std::upper_bound(r_rule_.nodes.begin(), r_rule_.nodes.end(), f.r_hi) - r_rule_.nodes.begin());
  std::vector<std::size_t> rows;
  std::vector<double> values;
  for (std::size_t i = 0; i < nt; ++i) {
    const double t = t_rule_.nodes[i];
    if (t < f.t_lo || t > f.t_hi) continue;
    rows.push_back(i);
    for (std::size_t j = 0; j < r_end; ++j) values.push_back(f(t, r_rule_.nodes[j]));
  }
  ModeTransform out{std::vector<cd>(nk)};
  for (std::size_t q = 0; q < nk; ++q) {
    const double* rw = &radial_weight_[q * nr];
    cd b = 0;
    for (std::size_t a = 0; a < rows.size(); ++a) {
      const double* row = &values[a * r_end];
      double fhat = 0;
      for (std::size_t j = 0; j < r_end; ++j) fhat += rw[j] * row[j];
      b += time_weight_[q * nt + rows[a]] * fhat;
    }
    out.b[q] = b;
  }
  return out;
}

cd ModeSmearing::vacuum(const ModeTransform& f, const ModeTransform& fp) const {
  cd sum = 0;
  for (std::size_t q = 0; q < k_.size(); ++q) sum += kw_[q] * k_[q] * k_[q] * f.b[q] * std::conj(fp.b[q]);
  return sum / (2 * pi * pi);
}

cd ModeSmearing::thermal(const ModeTransform& f, const ModeTransform& fp, double beta) const {
  if (!(beta > 0)) throw DomainError("ModeSmearing: beta must be positive");
  cd sum = 0;
  for (std::size_t q = 0; q < k_.size(); ++q) {
    const double k = k_[q];
    const double em = -std::expm1(-beta * k), ep = std::expm1(beta * k);
    sum += kw_[q] * k * k * (f.b[q] * std::conj(fp.b[q]) / em + std::conj(f.b[q]) * fp.b[q] / ep);
  }
  return sum / (2 * pi * pi);
}

cd ModeSmearing::vacuum(const RadialTestFunction& f, const RadialTestFunction& fp) const {
  return vacuum(transform(f), transform(fp));
}

cd ModeSmearing::thermal(const RadialTestFunction& f, const RadialTestFunction& fp, double beta) const {
  return thermal(transform(f), transform(fp), beta);
}

}  // namespace qfcs::bulk
