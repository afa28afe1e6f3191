#include "qfcs/modes/duhamel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "qfcs/error.hpp"
#include "qfcs/modes/de_sitter.hpp"

namespace qfcs::modes {

namespace {

void check_convergence_case(const ModePotential& v, NuParameter nu) {
  const double re = nu.value.real();
  const double p = v.decay_exponent();
  const bool case_i = re < 0.5 && p >= 3;
  const bool case_ii = re < 1.5 && p >= 5;
  if (case_i || case_ii) return;
  std::ostringstream msg;
  msg << "duhamel_series: neither convergence case holds (Re nu = " << re
      << ", decay exponent = " << p << "); case (i) needs Re nu < 1/2 with dV = O(tau^-3), "
      << "case (ii) needs Re nu < 3/2 with dV = O(tau^-5)";
  throw PreconditionError(msg.str());
}

// Cumulative integral of samples on an arbitrary ascending grid, exact for cubics
// through the four nearest nodes of each interval.
std::vector<cd> cumulative(const std::vector<double>& x, const std::vector<cd>& y) {
  const std::size_t n = x.size();
  std::vector<cd> out(n);
  if (n < 4) throw DomainError("duhamel: internal grid too small");
  static constexpr double g[3] = {-0.7745966692414834, 0.0, 0.7745966692414834};
  static constexpr double w[3] = {5.0 / 9, 8.0 / 9, 5.0 / 9};
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const std::size_t lo = std::clamp<std::size_t>(i == 0 ? 0 : i - 1, 0, n - 4);
    const double a = x[i], b = x[i + 1];
    cd sum{};
    for (int q = 0; q < 3; ++q) {
      const double t = 0.5 * (a + b) + 0.5 * (b - a) * g[q];
      cd p{};
      for (std::size_t j = lo; j < lo + 4; ++j) {
        double l = 1.0;
        for (std::size_t m = lo; m < lo + 4; ++m)
          if (m != j) l *= (t - x[m]) / (x[j] - x[m]);
        p += l * y[j];
      }
      sum += w[q] * p;
    }
    out[i + 1] = out[i] + 0.5 * (b - a) * sum;
  }
  return out;
}

}  // namespace

ModeFunction duhamel_series(const ModePotential& potential, NuParameter nu, double k,
                            const std::vector<double>& grid, int order,
                            const DuhamelOptions& options) {
  if (order < 0) throw DomainError("duhamel_series: order must be non-negative");
  if (!potential.reference()) throw PreconditionError("duhamel_series: needs a de Sitter reference");
  if (grid.empty() || !(grid.back() < 0)) throw DomainError("duhamel_series: grid must lie in tau < 0");

  ModeFunction base = ds_mode_function(k, grid, nu);
  base.order_norms.push_back(0.0);
  for (const cd c : base.chi) base.order_norms[0] = std::max(base.order_norms[0], std::abs(c));
  if (order == 0 || potential.delta_is_zero()) {
    base.order_norms.resize(static_cast<std::size_t>(order) + 1, 0.0);
    return base;
  }
  check_convergence_case(potential, nu);

  // Start deep enough that the neglected tail int |dV| / (2k) stays below tolerance,
  // estimated from the declared power-law decay.
  const double p = potential.decay_exponent();
  double start = std::min(grid.front(), -1.0) * 2;
  for (int it = 0; it < 200; ++it) {
    const double tail = std::abs(potential.delta(start)) * std::abs(start) / (p - 1) / (2 * k);
    if (tail < options.tail_tolerance) break;
    start *= 1.5;
  }

  // Fine grid containing every requested node.
  const double h_max = 2 * std::numbers::pi / (2 * k) / options.points_per_wavelength;
  std::vector<double> nodes{start};
  for (double g : grid)
    if (g > nodes.back()) nodes.push_back(g);
  std::vector<double> x{nodes.front()};
  std::vector<std::size_t> grid_index;
  for (std::size_t s = 1; s < nodes.size(); ++s) {
    const double len = nodes[s] - nodes[s - 1];
    const auto pieces = static_cast<std::size_t>(std::ceil(len / std::min(h_max, 0.02 * std::abs(nodes[s]))));
    for (std::size_t j = 1; j <= std::max<std::size_t>(pieces, 1); ++j)
      x.push_back(j == std::max<std::size_t>(pieces, 1) ? nodes[s] : nodes[s - 1] + len * j / pieces);
  }
  for (double g : grid) grid_index.push_back(static_cast<std::size_t>(
                            std::lower_bound(x.begin(), x.end(), g) - x.begin()));

  const std::size_t n = x.size();
  std::vector<cd> chi0(n), dchi0(n), dv(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto m = ds_mode(k, x[i], nu);
    chi0[i] = m.chi;
    dchi0[i] = m.dchi;
    dv[i] = -potential.delta(x[i]);
  }

  std::vector<cd> term = chi0, sum_chi = chi0, sum_dchi = dchi0;
  std::vector<double> norms{base.order_norms[0]};
  const cd i1(0.0, 1.0);
  for (int ord = 1; ord <= order; ++ord) {
    std::vector<cd> fa(n), fb(n);
    for (std::size_t i = 0; i < n; ++i) {
      const cd f = dv[i] * term[i];
      fa[i] = std::conj(chi0[i]) * f;
      fb[i] = chi0[i] * f;
    }
    const auto A = cumulative(x, fa);
    const auto B = cumulative(x, fb);
    double norm = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      term[i] = i1 * chi0[i] * A[i] - i1 * std::conj(chi0[i]) * B[i];
      const cd dterm = i1 * dchi0[i] * A[i] - i1 * std::conj(dchi0[i]) * B[i];
      sum_chi[i] += term[i];
      sum_dchi[i] += dterm;
    }
    for (std::size_t gi : grid_index) norm = std::max(norm, std::abs(term[gi]));
    norms.push_back(norm);
  }

  ModeFunction out;
  out.k = k;
  out.tau = grid;
  out.tau0 = start;
  for (std::size_t gi : grid_index) {
    out.chi.push_back(sum_chi[gi]);
    out.dchi.push_back(sum_dchi[gi]);
  }
  out.order_norms = std::move(norms);
  return out;
}

}  // namespace qfcs::modes
