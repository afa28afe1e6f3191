#include <cmath>
#include <memory>
#include <numbers>

#include "qfcs/boundary/horizon.hpp"
#include "qfcs/boundary/scalar_products.hpp"
#include "qfcs/bulk/cauchy.hpp"
#include "qfcs/error.hpp"
#include "qfcs/geometry/schwarzschild.hpp"
#include "qfcs/symmetry/bms.hpp"
#include "registry.hpp"

namespace qfcs::harness::detail {

namespace {

constexpr double pi = std::numbers::pi;

std::vector<double> symmetric_grid(double k_max, std::size_t n) {
  std::vector<double> k(n);
  for (std::size_t i = 0; i < n; ++i) k[i] = -k_max + 2 * k_max * (static_cast<double>(i) + 0.5) / static_cast<double>(n);
  for (std::size_t i = 0; i < n / 2; ++i) k[n - 1 - i] = -k[i];
  return k;
}

double fitted_log_ratio_slope(std::span<const double> k, std::span<const double> w) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::size_t n = 0;
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (!(k[i] > 0)) continue;
    const double y = std::log(w[i] / w[k.size() - 1 - i]);
    sx += k[i], sy += y, sxx += k[i] * k[i], sxy += k[i] * y;
    ++n;
  }
  const double dn = static_cast<double>(n);
  return (dn * sxy - sx * sy) / (dn * sxx - sx * sx);
}

void kms(Context& ctx) {
  const auto& p = ctx.params();
  const std::string target = p.text("target");
  const auto n = static_cast<std::size_t>(p.integer("points"));
  const auto k = symmetric_grid(p.number("k_max"), n);
  const double tol = p.number("tol");
  Table t("kms", {"target", "parameter", "beta", "fitted_beta", "max_deviation"});
  double worst = 0, worst_beta = 0;
  if (target == "horizon") {
    for (double m : p.numbers("M")) {
      const geometry::SchwarzschildChart chart(m);
      std::vector<double> w(n);
      for (std::size_t i = 0; i < n; ++i) w[i] = boundary::horizon_thermal_density(m, k[i]);
      const double beta = chart.hawking_beta();
      const auto r = boundary::kms_check(k, w, beta);
      const double fit = fitted_log_ratio_slope(k, w);
      t.add_row({target, m, beta, fit, r.max_deviation});
      worst = std::max(worst, r.kms ? r.max_deviation : INFINITY);
      worst_beta = std::max(worst_beta, std::abs(fit / (8 * pi * m) - 1));
    }
  } else if (target == "thermal") {
    for (double beta : p.numbers("beta")) {
      std::vector<double> w(n);
      for (std::size_t i = 0; i < n; ++i) w[i] = boundary::thermal_weight(k[i], beta);
      const auto r = boundary::kms_check(k, w, beta);
      const double fit = fitted_log_ratio_slope(k, w);
      t.add_row({target, beta, beta, fit, r.max_deviation});
      worst = std::max(worst, r.kms ? r.max_deviation : INFINITY);
      worst_beta = std::max(worst_beta, std::abs(fit / beta - 1));
    }
  } else {
    throw ConfigError("kms: target must be horizon or thermal");
  }
  ctx.add_table(std::move(t));
  ctx.check("max |rho(k) / (rho(-k) e^{beta k}) - 1|", worst, Relation::less, tol);
  ctx.check(target == "horizon" ? "fitted beta / (8 pi M) - 1" : "fitted beta / beta - 1", worst_beta,
            Relation::less, p.number("beta_tol"));
}

void thermal_limit(Context& ctx) {
  const auto& p = ctx.params();
  const double beta = p.number("beta");
  auto sphere = std::make_shared<const geometry::SphereGrid>(0);
  const auto grid = boundary::UGrid::centered(p.number("half_width"), static_cast<std::size_t>(p.integer("points")));
  const double y00 = 1 / std::sqrt(4 * pi);
  auto angular = [y00](const geometry::SpherePoint&) { return y00; };
  // derivatives of Gaussians: no zero mode
  struct Member {
    double c, s;
  };
  const Member battery[] = {{0.0, 0.5}, {0.7, 0.8}, {-1.2, 1.0}, {0.3, 1.5}, {-0.5, 0.35}};
  std::vector<boundary::BoundaryFunction> psi;
  for (const auto& m : battery)
    psi.push_back(boundary::BoundaryFunction::separable(
        grid, sphere,
        [m](double u) {
          const double x = (u - m.c) / m.s;
          return -x / m.s * std::exp(-0.5 * x * x);
        },
        angular));
  Table t("thermal_limit", {"i", "j", "mu_vacuum", "mu_thermal", "relative_gap"});
  double worst = 0;
  for (std::size_t i = 0; i < psi.size(); ++i)
    for (std::size_t j = i; j < psi.size(); ++j) {
      const double mv = boundary::mu_vacuum(psi[i], psi[j]);
      const double mt = boundary::mu_thermal(psi[i], psi[j], beta);
      if (std::abs(mv) < 1e-3 * std::sqrt(boundary::mu_vacuum(psi[i], psi[i]) * boundary::mu_vacuum(psi[j], psi[j])))
        continue;
      const double gap = std::abs(mt / mv - 1);
      worst = std::max(worst, gap);
      t.add_row({static_cast<double>(i), static_cast<double>(j), mv, mt, gap});
    }
  ctx.add_table(std::move(t));
  ctx.check("max |mu_thermal / mu_vacuum - 1|", worst, Relation::less, p.number("tol"));
}

double point_distance(const symmetry::NullPoint& a, const symmetry::NullPoint& b) {
  const auto x = a.p.cartesian(), y = b.p.cartesian();
  const double d = std::hypot(x[0] - y[0], x[1] - y[1], x[2] - y[2]);
  return std::max(std::abs(a.u - b.u) / std::max(1.0, std::abs(a.u)), d);
}

geometry::SpherePoint random_point(CounterRng& rng) {
  return {std::acos(rng.uniform(-1, 1)), rng.uniform(0, 2 * pi)};
}

void bms(Context& ctx) {
  const auto& p = ctx.params();
  const auto n = static_cast<std::size_t>(p.integer("elements"));
  const int l_max = static_cast<int>(p.integer("lmax"));
  auto& rng = ctx.rng();
  auto element = [&] {
    return symmetry::BMSElement{symmetry::LorentzElement::random(rng, 0.5),
                                symmetry::random_supertranslation(rng, l_max)};
  };
  double cocycle = 0, assoc = 0, inverse = 0, rotation = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto g1 = element(), g2 = element(), g3 = element();
    const auto pt = random_point(rng);
    const symmetry::NullPoint x{rng.uniform(-2, 2), pt};

    const auto& l1 = g1.lorentz;
    const auto& l2 = g2.lorentz;
    const double lhs = symmetry::k_factor(l1, l2.act(pt)) * symmetry::k_factor(l2, pt);
    const double rhs = symmetry::k_factor(l1 * l2, pt);
    cocycle = std::max(cocycle, std::abs(lhs - rhs) / std::abs(rhs));

    const auto left = symmetry::bms_compose(g1, symmetry::bms_compose(g2, g3));
    const auto right = symmetry::bms_compose(symmetry::bms_compose(g1, g2), g3);
    assoc = std::max(assoc, point_distance(symmetry::bms_act(left, x), symmetry::bms_act(right, x)));

    const auto inv = symmetry::bms_inverse(g1);
    inverse = std::max({inverse, point_distance(symmetry::bms_act(symmetry::bms_compose(g1, inv), x), x),
                        point_distance(symmetry::bms_act(symmetry::bms_compose(inv, g1), x), x)});

    const auto r = symmetry::LorentzElement::random_rotation(rng);
    rotation = std::max(rotation, std::abs(symmetry::k_factor(r, pt) - 1));
  }
  Table t("bms", {"law", "max_deviation"});
  t.add_row({std::string("cocycle"), cocycle});
  t.add_row({std::string("associativity"), assoc});
  t.add_row({std::string("inverse"), inverse});
  t.add_row({std::string("rotation_K"), rotation});
  ctx.add_table(std::move(t));
  ctx.check("cocycle K_L'(L p) K_L(p) = K_L'L(p), relative", cocycle, Relation::less, p.number("cocycle_tol"));
  ctx.check("associativity of the BMS product", assoc, Relation::less, p.number("group_tol"));
  ctx.check("inverse law of the BMS product", inverse, Relation::less, p.number("group_tol"));
  ctx.check("|K - 1| on SO(3)", rotation, Relation::less, p.number("rotation_tol"));
}

void symplectic(Context& ctx) {
  const auto& p = ctx.params();
  const auto pairs = static_cast<std::size_t>(p.integer("pairs"));
  const double r_max = p.number("r_max"), h = p.number("h");
  auto sphere = std::make_shared<const geometry::SphereGrid>(2);
  const auto grid = boundary::UGrid::centered(p.number("u_half_width"), static_cast<std::size_t>(p.integer("u_points")));
  auto& rng = ctx.rng();
  auto wave = [&] {
    const double c = rng.uniform(-1, 1), s = rng.uniform(0.4, 0.8);
    const double a = rng.uniform(0.5, 1.5) * (rng.uniform() < 0.5 ? -1 : 1);
    return bulk::SphericalWave{[=](double x) { return a * std::exp(-(x - c) * (x - c) / (2 * s * s)); },
                               [=](double x) { return -a * (x - c) / (s * s) * std::exp(-(x - c) * (x - c) / (2 * s * s)); }};
  };
  Table t("symplectic", {"pair", "sigma_bulk", "sigma_bulk_evolved", "sigma_boundary", "deviation"});
  double worst = 0, worst_evolved = 0;
  for (std::size_t i = 0; i < pairs; ++i) {
    const auto a = wave(), b = wave();
    const auto da = a.cauchy_data(0, r_max, h), db = b.cauchy_data(0, r_max, h);
    const double sb = bulk::sigma_bulk(da, db);
    const double se = bulk::sigma_bulk(bulk::evolve_free(da, 1.0), bulk::evolve_free(db, 1.0));
    const double sg = boundary::sigma_boundary(bulk::gamma_scri_minkowski(a, grid, sphere),
                                               bulk::gamma_scri_minkowski(b, grid, sphere));
    worst = std::max(worst, std::abs(sb - sg));
    worst_evolved = std::max(worst_evolved, std::abs(se - sb));
    t.add_row({static_cast<double>(i), sb, se, sg, std::abs(sb - sg)});
  }
  ctx.add_table(std::move(t));
  ctx.check("max |sigma_bulk - sigma_boundary(Gamma)|", worst, Relation::less, p.number("tol"));
  ctx.check("max |sigma_bulk(evolved) - sigma_bulk|", worst_evolved, Relation::less, p.number("tol"));
}

}  // namespace

void register_boundary_experiments(std::vector<Experiment>& out) {
  out.push_back({"kms",
                 "Detailed balance of horizon or thermal spectral weights",
                 {{"target", "horizon", "horizon (Unruh state on the horizon) or thermal"},
                  {"M", "0.5,1,2", "black-hole masses for target horizon"},
                  {"beta", "0.5,2,10", "inverse temperatures for target thermal"},
                  {"points", "64", "symmetric k-grid size"},
                  {"k_max", "2", "k-grid half width"},
                  {"tol", "1e-12", "detailed-balance bound"},
                  {"beta_tol", "1e-10", "bound on the fitted inverse temperature"}},
                 kms});
  out.push_back({"thermal-limit",
                 "mu_beta / mu_vacuum on a zero-mode-free Gaussian battery",
                 {{"beta", "1e3", "inverse temperature"},
                  {"half_width", "12", "u-grid half width"},
                  {"points", "961", "u-grid size"},
                  {"tol", "1e-6", "bound on |ratio - 1|"}},
                 thermal_limit});
  out.push_back({"bms",
                 "BMS cocycle, associativity, inverse and rotation laws on random elements",
                 {{"elements", "1000", "random samples"},
                  {"lmax", "4", "supertranslation harmonic cutoff"},
                  {"cocycle_tol", "1e-10", ""},
                  {"group_tol", "1e-9", ""},
                  {"rotation_tol", "1e-12", ""}},
                 bms});
  out.push_back({"symplectic",
                 "sigma_bulk against sigma_boundary after the null-infinity map, Minkowski",
                 {{"pairs", "10", "random spherical-wave pairs"},
                  {"r_max", "12", "radial grid extent"},
                  {"h", "0.005", "radial step"},
                  {"u_half_width", "10", ""},
                  {"u_points", "2048", ""},
                  {"tol", "1e-3", "bound on the symplectic mismatch"}},
                 symplectic});
}

}  // namespace qfcs::harness::detail
