#include "qfcs/bulk/causal_propagator.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <vector>

#include "qfcs/error.hpp"
#include "qfcs/numeric/spline.hpp"

namespace qfcs::bulk {

namespace {

std::size_t panels_for(double length, double width) {
  return std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(length / width)));
}

}  // namespace

// F(s, rho) = integral of f(t, rho) over t < s, tabulated on a uniform grid.
class TimePrimitive {
 public:
  TimePrimitive(const RadialTestFunction& f, double h) : t0_(f.t_lo), h_(h), r_hi_(f.r_hi) {
    ns_ = static_cast<std::size_t>(std::ceil((f.t_hi - f.t_lo) / h)) + 1;
    nr_ = static_cast<std::size_t>(std::ceil(f.r_hi / h)) + 3;
    value_.assign(ns_ * nr_, 0.0);
    slope_.assign(ns_ * nr_, 0.0);
    const auto gl = numeric::gauss_legendre(4);
    for (std::size_t j = 0; j < nr_; ++j) {
      const double rho = static_cast<double>(j) * h;
      double acc = 0;
      for (std::size_t i = 0; i < ns_; ++i) {
        const double s = t0_ + static_cast<double>(i) * h;
        if (i > 0)
          for (std::size_t q = 0; q < gl.nodes.size(); ++q)
            acc += 0.5 * h * gl.weights[q] * f(s - 0.5 * h * (1 - gl.nodes[q]), rho);
        value_[i * nr_ + j] = acc;
        slope_[i * nr_ + j] = f(s, rho);
      }
    }
  }

  double operator()(double s, double rho) const {
    rho = std::abs(rho);
    if (rho >= r_hi_) return 0.0;
    const double x = rho / h_;
    const auto j = static_cast<std::ptrdiff_t>(std::floor(x));
    const double p = x - static_cast<double>(j);
    // cubic Lagrange on j-1..j+2, reflected through rho = 0
    const std::array<double, 4> w{-p * (p - 1) * (p - 2) / 6, (p + 1) * (p - 1) * (p - 2) / 2,
                                  -(p + 1) * p * (p - 2) / 2, (p + 1) * p * (p - 1) / 6};
    double out = 0;
    for (std::ptrdiff_t q = 0; q < 4; ++q) {
      const auto jj = static_cast<std::size_t>(std::abs(j - 1 + q));
      if (jj < nr_) out += w[static_cast<std::size_t>(q)] * in_time(s, jj);
    }
    return out;
  }

 private:
  double in_time(double s, std::size_t j) const {
    const double y = (s - t0_) / h_;
    if (y <= 0) return 0.0;
    if (y >= static_cast<double>(ns_ - 1)) return value_[(ns_ - 1) * nr_ + j];
    const auto i = std::min(static_cast<std::size_t>(y), ns_ - 2);
    const double x0 = t0_ + static_cast<double>(i) * h_;
    return numeric::hermite(s, x0, x0 + h_, value_[i * nr_ + j], slope_[i * nr_ + j], value_[(i + 1) * nr_ + j],
                            slope_[(i + 1) * nr_ + j]);
  }

  double t0_, h_, r_hi_;
  std::size_t ns_ = 0, nr_ = 0;
  std::vector<double> value_, slope_;
};

namespace {

double light_cone_bracket(const TimePrimitive& prim, double t, double r, double rho) {
  const double near = std::abs(r - rho), far = r + rho;
  return prim(t + far, rho) - prim(t + near, rho) - prim(t - near, rho) + prim(t - far, rho);
}

numeric::GaussRule split_rule(double r, double rho_hi, const PropagatorOptions& opt) {
  numeric::GaussRule inner;
  auto append = [&](double lo, double hi) {
    if (hi <= lo) return;
    const auto g = numeric::composite_gauss(lo, hi, panels_for(hi - lo, opt.panel_width), opt.order);
    inner.nodes.insert(inner.nodes.end(), g.nodes.begin(), g.nodes.end());
    inner.weights.insert(inner.weights.end(), g.weights.begin(), g.weights.end());
  };
  append(0.0, std::min(r, rho_hi));
  append(std::min(r, rho_hi), rho_hi);
  return inner;
}

}  // namespace

CausalField::CausalField(RadialTestFunction f, PropagatorOptions opt)
    : f_(std::move(f)), opt_(opt), prim_(std::make_shared<TimePrimitive>(f_, opt.table_step)) {}

double CausalField::operator()(double t, double r) const {
  if (r < 1e-9) r = 1e-9;
  const auto inner = split_rule(r, f_.r_hi, opt_);
  double s = 0;
  for (std::size_t c = 0; c < inner.size(); ++c)
    s += inner.weights[c] * inner.nodes[c] * light_cone_bracket(*prim_, t, r, inner.nodes[c]);
  return s / (2 * r);
}

double minkowski_causal_propagator(const RadialTestFunction& f, const RadialTestFunction& fp,
                                   const PropagatorOptions& opt) {
  // earliest and latest times reachable by the light cones of f' from f
  if (f.t_hi + f.r_hi + fp.r_hi < fp.t_lo && fp.t_hi + f.r_hi + fp.r_hi < f.t_lo) return 0.0;
  const TimePrimitive prim(fp, opt.table_step);
  const auto tr = numeric::composite_gauss(f.t_lo, f.t_hi, panels_for(f.t_hi - f.t_lo, opt.panel_width), opt.order);
  const auto rr = numeric::composite_gauss(0.0, f.r_hi, panels_for(f.r_hi, opt.panel_width), opt.order);
  const double rho_hi = fp.r_hi;

  double total = 0;
  for (std::size_t b = 0; b < rr.nodes.size(); ++b) {
    const double r = rr.nodes[b];
    const auto inner = split_rule(r, rho_hi, opt);
    for (std::size_t a = 0; a < tr.nodes.size(); ++a) {
      const double t = tr.nodes[a];
      const double fv = f(t, r);
      if (fv == 0.0) continue;
      double s = 0;
      for (std::size_t c = 0; c < inner.size(); ++c)
        s += inner.weights[c] * inner.nodes[c] * light_cone_bracket(prim, t, r, inner.nodes[c]);
      total += tr.weights[a] * rr.weights[b] * r * fv * s;
    }
  }
  return 2 * std::numbers::pi * total;
}

Bilinear conformal_green_rescale(Bilinear g, std::function<double(double)> omega) {
  return [g = std::move(g), omega = std::move(omega)](const RadialTestFunction& f, const RadialTestFunction& fp) {
    auto cube = [&](const RadialTestFunction& h) {
      for (int i = 0; i <= 16; ++i) {
        const double t = h.t_lo + (h.t_hi - h.t_lo) * i / 16.0;
        if (!(omega(t) > 0)) throw DomainError("conformal_green_rescale: conformal factor must be positive");
      }
      return h.times([&omega](double t) { return std::pow(omega(t), 3); });
    };
    return g(cube(f), cube(fp));
  };
}

namespace {

struct RadialGrid {
  double dr, dt, t0, r_max;
  std::size_t nr, nt;
};

// returns <g, G_ret h> with <g, psi> = int dt 4 pi r^2 g psi dr
double retarded_pairing(const std::function<double(double)>& v, const RadialTestFunction& h,
                        const RadialTestFunction& g, const RadialGrid& grid) {
  std::vector<double> prev(grid.nr, 0.0), cur(grid.nr, 0.0), next(grid.nr, 0.0);
  const double dt2 = grid.dt * grid.dt, lam = dt2 / (grid.dr * grid.dr);
  double pairing = 0;
  for (std::size_t n = 0; n + 1 < grid.nt; ++n) {
    const double t = grid.t0 + static_cast<double>(n) * grid.dt;
    double slice = 0;
    for (std::size_t j = 1; j + 1 < grid.nr; ++j) {
      const double r = static_cast<double>(j) * grid.dr;
      slice += r * g(t, r) * cur[j];
    }
    pairing += 4 * std::numbers::pi * grid.dr * grid.dt * slice;
    const double vt = v(t);
    for (std::size_t j = 1; j + 1 < grid.nr; ++j) {
      const double r = static_cast<double>(j) * grid.dr;
      next[j] = 2 * cur[j] - prev[j] + lam * (cur[j + 1] - 2 * cur[j] + cur[j - 1]) - dt2 * vt * cur[j] +
                dt2 * r * h(t, r);
    }
    std::swap(prev, cur);
    std::swap(cur, next);
  }
  return pairing;
}

double leapfrog_once(const std::function<double(double)>& v, const RadialTestFunction& f,
                     const RadialTestFunction& fp, double dr, double cfl) {
  const double t_lo = std::min(f.t_lo, fp.t_lo) - dr, t_hi = std::max(f.t_hi, fp.t_hi) + dr;
  const double r_max = std::max(f.r_hi, fp.r_hi) + (t_hi - t_lo) + 1.0;
  RadialGrid grid{dr, cfl * dr, t_lo, r_max, 0, 0};
  grid.nr = static_cast<std::size_t>(std::ceil(r_max / dr)) + 1;
  grid.nt = static_cast<std::size_t>(std::ceil((t_hi - t_lo) / grid.dt)) + 1;
  return retarded_pairing(v, f, fp, grid) - retarded_pairing(v, fp, f, grid);
}

}  // namespace

double leapfrog_causal_propagator(const std::function<double(double)>& v, const RadialTestFunction& f,
                                  const RadialTestFunction& fp, const LeapfrogOptions& opt) {
  if (!(opt.dr > 0) || !(opt.cfl > 0) || opt.cfl > 1) throw DomainError("leapfrog: need dr > 0 and 0 < cfl <= 1");
  const double coarse = leapfrog_once(v, f, fp, opt.dr, opt.cfl);
  if (!opt.richardson) return coarse;
  const double fine = leapfrog_once(v, f, fp, opt.dr / 2, opt.cfl);
  return (4 * fine - coarse) / 3;
}

}  // namespace qfcs::bulk
