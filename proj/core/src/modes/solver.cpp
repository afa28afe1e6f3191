#include "qfcs/modes/solver.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <mutex>
#include <map>
#include <sstream>

#include "qfcs/error.hpp"
#include "qfcs/modes/de_sitter.hpp"
#include "qfcs/numeric/finite_difference.hpp"
#include "qfcs/numeric/quadrature.hpp"

namespace qfcs::modes {

namespace {

struct Tableau {
  std::vector<double> c, b;
  Eigen::MatrixXd a;
};

Tableau build_tableau(int s) {
  const auto rule = numeric::gauss_legendre(static_cast<std::size_t>(s), 0.0, 1.0);
  Tableau t;
  t.c = rule.nodes;
  t.b = rule.weights;
  t.a = Eigen::MatrixXd(s, s);
  for (int i = 0; i < s; ++i) {
    const auto sub = numeric::gauss_legendre(static_cast<std::size_t>(s), 0.0, t.c[i]);
    for (int j = 0; j < s; ++j) {
      t.a(i, j) = numeric::integrate_rule(sub, [&](double x) {
        double l = 1.0;
        for (int m = 0; m < s; ++m)
          if (m != j) l *= (x - t.c[m]) / (t.c[j] - t.c[m]);
        return l;
      });
    }
  }
  return t;
}

const Tableau& tableau(int s) {
  static std::mutex mutex;
  static std::map<int, Tableau> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(s);
  if (it == cache.end()) it = cache.emplace(s, build_tableau(s)).first;
  return it->second;
}

class Stepper {
 public:
  Stepper(const ModePotential& v, double k, int stages) : v_(v), k2_(k * k), t_(tableau(stages)) {}

  // Real 2x2 propagator of (chi, chi') over [t, t + h].
  Eigen::Matrix2d propagator(double t, double h) const {
    const int s = static_cast<int>(t_.c.size());
    std::vector<double> q(static_cast<std::size_t>(s));
    for (int j = 0; j < s; ++j) q[j] = k2_ + v_(t + t_.c[j] * h);
    // Stage unknowns Y_i = (x_i, y_i); A_j = [[0, 1], [-q_j, 0]].
    Eigen::MatrixXd m = Eigen::MatrixXd::Identity(2 * s, 2 * s);
    for (int i = 0; i < s; ++i)
      for (int j = 0; j < s; ++j) {
        m(2 * i, 2 * j + 1) -= h * t_.a(i, j);
        m(2 * i + 1, 2 * j) += h * t_.a(i, j) * q[j];
      }
    Eigen::MatrixXd rhs(2 * s, 2);
    for (int i = 0; i < s; ++i) {
      rhs(2 * i, 0) = 1.0;
      rhs(2 * i, 1) = 0.0;
      rhs(2 * i + 1, 0) = 0.0;
      rhs(2 * i + 1, 1) = 1.0;
    }
    const Eigen::MatrixXd y = m.partialPivLu().solve(rhs);
    Eigen::Matrix2d phi = Eigen::Matrix2d::Identity();
    for (int i = 0; i < s; ++i) {
      phi(0, 0) += h * t_.b[i] * y(2 * i + 1, 0);
      phi(0, 1) += h * t_.b[i] * y(2 * i + 1, 1);
      phi(1, 0) -= h * t_.b[i] * q[i] * y(2 * i, 0);
      phi(1, 1) -= h * t_.b[i] * q[i] * y(2 * i, 1);
    }
    return phi;
  }

  int order() const { return 2 * static_cast<int>(t_.c.size()); }

 private:
  const ModePotential& v_;
  double k2_;
  const Tableau& t_;
};

ModeValue asymptotic_data(const ModePotential& v, double k, double tau0) {
  if (v.reference()) {
    const double dv = v.delta(tau0);
    if (!(std::abs(dv) < 1e-8 * k * k)) {
      std::ostringstream msg;
      msg << "asymptotic vacuum: |dV(tau0)| = " << std::abs(dv) << " not below 1e-8 k^2 at tau0 = "
          << tau0;
      throw PreconditionError(msg.str());
    }
    return ds_mode(k, tau0, *v.reference());
  }
  if (std::isfinite(v.domain().lo))
    throw PreconditionError("asymptotic vacuum: potential domain does not extend to -infinity");
  const double v0 = v(tau0);
  if (!(std::abs(v0) < 1e-8 * k * k)) {
    std::ostringstream msg;
    msg << "asymptotic vacuum: |V(tau0)| = " << std::abs(v0) << " not below 1e-8 k^2 at tau0 = "
        << tau0;
    throw PreconditionError(msg.str());
  }
  const double k2 = k * k;
  const auto excess = [&](double s) {
    const double vv = v(-s);
    return vv / (std::sqrt(k2 + vv) + k);  // omega - k without cancellation
  };
  const double phase = numeric::integrate_to_infinity(excess, -tau0, 1e-14);
  const double omega = std::sqrt(k2 + v0);
  const double dv = numeric::central_derivative([&](double t) { return v(t); }, tau0,
                                                1e-3 * std::abs(tau0), 4);
  const double domega = dv / (2 * omega);
  const cd chi = std::exp(cd(0.0, -(k * tau0 + phase))) / std::sqrt(2 * omega);
  return {chi, (cd(0.0, -omega) - domega / (2 * omega)) * chi};
}

}  // namespace

ModeFunction solve_mode(const ModePotential& potential, double k, const std::vector<double>& grid,
                        const ModeInit& init, const SolverOptions& options) {
  if (!(k > 0)) throw DomainError("solve_mode: k must be positive");
  if (grid.empty()) throw DomainError("solve_mode: empty grid");
  for (std::size_t i = 1; i < grid.size(); ++i)
    if (!(grid[i] > grid[i - 1])) throw DomainError("solve_mode: grid must be ascending");

  double tau0;
  ModeValue start;
  if (const auto* a = std::get_if<AsymptoticVacuum>(&init)) {
    tau0 = a->tau0;
    start = asymptotic_data(potential, k, tau0);
  } else {
    const auto& e = std::get<ExplicitData>(init);
    tau0 = e.tau0;
    start = {e.chi0, e.dchi0};
  }
  if (grid.front() < tau0) throw PreconditionError("solve_mode: grid starts before tau0");

  const Stepper stepper(potential, k, options.stages);
  const double exponent = 1.0 / (stepper.order() + 1);

  ModeFunction out;
  out.k = k;
  out.tau = grid;
  out.tau0 = tau0;
  out.chi.reserve(grid.size());
  out.dchi.reserve(grid.size());

  Eigen::Vector2cd y(start.chi, start.dchi);
  double t = tau0;
  double h = 0.5 / std::sqrt(k * k + std::abs(potential(tau0)));
  for (double target : grid) {
    while (t < target) {
      const bool last = t + h >= target;
      const double step = last ? target - t : h;
      const Eigen::Matrix2d full = stepper.propagator(t, step);
      const Eigen::Matrix2d half = stepper.propagator(t + step / 2, step / 2) *
                                   stepper.propagator(t, step / 2);
      const Eigen::Vector2cd fine = half.cast<cd>() * y;
      const double err = ((full - half).cast<cd>() * y).norm() / std::max(fine.norm(), 1e-300);
      if (err <= options.rtol || step < 1e-13 * std::max(1.0, std::abs(t))) {
        if (!(err <= options.rtol) && step < 1e-13 * std::max(1.0, std::abs(t))) {
          std::ostringstream msg;
          msg << "solve_mode: step size underflow at tau=" << t << " (error estimate " << err
              << ")";
          throw IntegrationError(msg.str());
        }
        y = fine;
        t = last ? target : t + step;
      }
      const double factor = err > 0 ? 0.9 * std::pow(options.rtol / err, exponent) : 4.0;
      const double grown = step * std::clamp(factor, 0.2, 4.0);
      if (!last || err > options.rtol) h = grown;
    }
    out.chi.push_back(y[0]);
    out.dchi.push_back(y[1]);
  }
  return out;
}

}  // namespace qfcs::modes
