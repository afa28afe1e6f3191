#include <cmath>
#include <numbers>

#include "qfcs/bulk/causal_propagator.hpp"
#include "qfcs/error.hpp"
#include "qfcs/geometry/schwarzschild.hpp"
#include "qfcs/tunneling/horizon_limit.hpp"
#include "qfcs/wick/cone.hpp"
#include "qfcs/wick/star_product.hpp"
#include "registry.hpp"

namespace qfcs::harness::detail {

namespace {

using cd = std::complex<double>;
constexpr double pi = std::numbers::pi;

std::vector<cd> random_profile(CounterRng& rng, const wick::FunctionalGrid& g) {
  const double c = rng.uniform(-1, 1), w = rng.uniform(0.4, 1.0);
  const cd amp{rng.uniform(-1, 1), rng.uniform(-1, 1)};
  std::vector<cd> out(g.x.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    const double x = (g.x[i] - c) / w;
    out[i] = amp * std::exp(-0.5 * x * x) * (1.0 + 0.3 * rng.uniform(-1, 1));
  }
  return out;
}

void star_algebra(Context& ctx) {
  const auto& p = ctx.params();
  const auto n = static_cast<std::size_t>(p.integer("nodes"));
  const auto trials = static_cast<std::size_t>(p.integer("trials"));
  auto grid = wick::FunctionalGrid::uniform(-3, 3, n);
  auto gfun = [](double x, double y) { return std::sin(x - y) * std::exp(-0.1 * (x * x + y * y)); };
  auto hfun = [](double x, double y) { return std::cos(x - y) / (1 + (x - y) * (x - y)) + 0.3; };
  const auto causal = wick::ProductKernel::causal(grid, gfun);
  const auto had = wick::ProductKernel::hadamard(grid, hfun, gfun);
  const auto hsym = wick::ProductKernel::sample(wick::KernelRole::hadamard, grid,
                                                [&](double x, double y) { return cd(hfun(x, y), 0); });
  auto hneg = hsym;
  for (auto& v : hneg.values) v = -v;
  auto& rng = ctx.rng();

  double ccr = 0, ccr_h = 0, inverse = 0, homo = 0, assoc = 0;
  Table t("star_algebra", {"trial", "ccr", "ccr_hadamard", "alpha_inverse", "homomorphism", "associativity"});
  for (std::size_t k = 0; k < trials; ++k) {
    const auto f = random_profile(rng, *grid), g = random_profile(rng, *grid), h = random_profile(rng, *grid);
    const auto F = wick::Functional::linear(grid, f), G = wick::Functional::linear(grid, g),
               H = wick::Functional::linear(grid, h);
    cd igfg = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) igfg += grid->w[i] * grid->w[j] * f[i] * gfun(grid->x[i], grid->x[j]) * g[j];
    igfg *= cd(0, 1);
    const auto one = wick::Functional::constant(grid, igfg);
    const double c1 = (wick::star_product(F, G, causal) - wick::star_product(G, F, causal)).distance(one);
    const double c2 = (wick::star_product(F, G, had) - wick::star_product(G, F, had)).distance(one);

    auto Q = F + wick::Functional::constant(grid, cd(rng.uniform(-1, 1), 0));
    std::vector<cd> dense(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) dense[i * n + j] = 0.5 * (f[i] * h[j] + f[j] * h[i]);
    Q.add_dense(2, dense);
    std::vector<cd> rho(n);
    for (std::size_t i = 0; i < n; ++i) rho[i] = std::exp(-grid->x[i] * grid->x[i]);
    const auto Qp = wick::Functional::wick_square(grid, rho) + G;
    const auto prod = wick::star_product(Q, Qp, causal);
    const double inv = wick::alpha_deform(wick::alpha_deform(prod, hsym), hneg).distance(prod);
    const double hom = wick::alpha_deform(prod, hsym)
                           .distance(wick::star_product(wick::alpha_deform(Q, hsym), wick::alpha_deform(Qp, hsym), had));
    const double as = wick::star_product(wick::star_product(F, G, causal), H, causal)
                          .distance(wick::star_product(F, wick::star_product(G, H, causal), causal));
    ccr = std::max(ccr, c1);
    ccr_h = std::max(ccr_h, c2);
    inverse = std::max(inverse, inv);
    homo = std::max(homo, hom);
    assoc = std::max(assoc, as);
    t.add_row({static_cast<double>(k), c1, c2, inv, hom, as});
  }
  ctx.add_table(std::move(t));

  std::vector<cd> rho(n, 1.0);
  const auto W = wick::Functional::wick_square(grid, rho);
  double raised = 0;
  try {
    (void)wick::star_product(W, W, causal);
  } catch (const DivergenceError&) {
    raised = 1;
  }

  ctx.check("CCR: [F, G]_* - iG(f, g) 1", ccr, Relation::less, p.number("ccr_tol"));
  ctx.check("CCR under the Hadamard product", ccr_h, Relation::less, p.number("ccr_tol"));
  ctx.check("alpha_{-H} alpha_H = id at truncation order", inverse, Relation::less, p.number("inverse_tol"));
  ctx.check("alpha_H(F * G) = alpha_H F *_H alpha_H G", homo, Relation::less, p.number("homomorphism_tol"));
  ctx.check("associativity on linear triples", assoc, Relation::less, p.number("inverse_tol"));
  ctx.check("diagonal G^2 contraction raises DivergenceError", raised, Relation::equal, 1.0);
}

void cone_restriction(Context& ctx) {
  const auto& p = ctx.params();
  const wick::DoubleCone cone{p.number("t_c")};
  const auto samples = static_cast<std::size_t>(p.integer("samples"));
  auto& rng = ctx.rng();
  Table t("cone", {"pair", "sigma_cone", "G", "relative_gap"});
  double worst = 0;
  const bulk::SmearingBox box{-1, 1, 1.5};
  for (std::size_t i = 0; i < static_cast<std::size_t>(p.integer("pairs")); ++i) {
    const auto f = bulk::random_test_function(rng, box, 0.1, 0.12);
    const auto g = bulk::random_test_function(rng, box, 0.1, 0.12);
    const double s = wick::sigma_cone(wick::pi_restriction(f, cone, samples), wick::pi_restriction(g, cone, samples));
    const double gfg = bulk::minkowski_causal_propagator(f, g);
    const double gap = std::abs(s - gfg) / std::max(std::abs(gfg), 1e-300);
    worst = std::max(worst, gap);
    t.add_row({static_cast<double>(i), s, gfg, gap});
  }
  ctx.add_table(std::move(t));
  ctx.check("sigma on the cone against G(f, g), relative", worst, Relation::less, p.number("tol"));
}

void tunneling(Context& ctx) {
  const auto& p = ctx.params();
  const double m = p.number("M");
  const geometry::SchwarzschildChart chart(m);
  const double kappa = p.has("kappa") && p.number("kappa") > 0 ? p.number("kappa") : chart.surface_gravity();
  const double beta = tunneling::hawking_beta(kappa);
  std::vector<double> energies;
  for (double x : p.numbers("energies")) energies.push_back(x / beta);
  tunneling::TunnelingOptions opt;
  opt.sigma_tau = p.number("sigma_beta") * beta;
  const auto est = tunneling::tunneling_estimate(energies, kappa, opt);
  Table t("tunneling", {"E0", "E0_beta", "probability", "fit_residual"});
  for (std::size_t i = 0; i < energies.size(); ++i)
    t.add_row({energies[i], energies[i] * beta, est.values[i], est.residuals[i]});
  ctx.add_table(std::move(t));
  Table fit("tunneling_fit", {"kappa", "beta_H", "fitted_slope", "beta_estimate", "intercept"});
  fit.add_row({kappa, beta, est.fitted_slope, -est.fitted_slope, est.intercept});
  ctx.add_table(std::move(fit));
  ctx.check("|fitted slope / (-beta_H) - 1|", std::abs(est.fitted_slope / -beta - 1), Relation::less, p.number("tol"));
  ctx.check("|beta_H(kappa = 1/4M) / (8 pi M) - 1|",
            std::abs(tunneling::hawking_beta(chart.surface_gravity()) / (8 * pi * m) - 1), Relation::less, 1e-14);
  double worst = 0;
  for (double r : est.residuals) worst = std::max(worst, std::abs(r));
  ctx.check("max relative fit residual", worst, Relation::less_equal, opt.residual_warning);
}

void horizon_limit(Context& ctx) {
  const auto& p = ctx.params();
  const double kappa = p.number("kappa");
  const double e0 = p.number("E0");
  const double w = p.number("sigma_tau");
  using tunneling::Side;
  using tunneling::WavePacket;
  auto f = WavePacket::concentrated(e0, kappa, Side::outer, 0.0, w);
  auto g = WavePacket::concentrated(e0, kappa, Side::outer, 0.2, w);
  g.u_center += 0.3;
  const auto lambdas = p.numbers("lambdas");
  const auto ladder = tunneling::correlation_ladder(f, g, lambdas);
  const cd limit = tunneling::scaled_correlation(f, g, 0);
  const cd spectral = tunneling::outer_outer_limit(f, g, kappa);
  const cd boundary = tunneling::horizon_limit_boundary(f, g, p.number("dv"));

  Table t("horizon_ladder", {"lambda", "re", "im"});
  for (std::size_t i = 0; i < lambdas.size(); ++i) t.add_row({lambdas[i], ladder.values[i].real(), ladder.values[i].imag()});
  t.add_row({0.0, limit.real(), limit.imag()});
  ctx.add_table(std::move(t));

  const auto spec = tunneling::outer_outer_spectrum(f, f, kappa);
  Table s("outer_outer_spectrum", {"E", "bose_weight", "overlap", "density"});
  double balance = 0;
  const std::size_t n = spec.energy.size();
  double peak = 0;
  for (const cd& o : spec.overlap) peak = std::max(peak, std::abs(o));
  for (std::size_t i = 0; i < n; ++i) {
    s.add_row({spec.energy[i], spec.bose[i], spec.overlap[i].real(), spec.density[i].real()});
    if (spec.energy[i] > 0 && std::abs(spec.overlap[i]) > 1e-6 * peak &&
        std::abs(spec.overlap[n - 1 - i]) > 1e-6 * peak)
      balance = std::max(balance, std::abs(spec.density[i].real() / (spec.density[n - 1 - i].real() *
                                                                      std::exp(spec.beta * spec.energy[i])) - 1));
  }
  ctx.add_table(std::move(s));

  double weight = 0;
  for (double e : {0.0, 0.3, 1.0, 2.5, 5.0, 9.0})
    weight = std::max(weight, std::abs(tunneling::cross_horizon_kernel_transform(e, kappa) /
                                           (pi * tunneling::cross_horizon_weight(e, 2 * pi / kappa)) - 1));
  const auto inner = WavePacket::concentrated(e0, kappa, Side::inner, 0.0, w);
  const cd cs = tunneling::cross_horizon_limit(inner, f), cd_ = tunneling::cross_horizon_limit_direct(inner, f);

  const double scale = std::abs(limit);
  ctx.check("lambda ladder is Cauchy with shrinking steps", ladder.cauchy ? 1.0 : 0.0, Relation::equal, 1.0);
  ctx.check("|limit - boundary kernel smearing| / |limit|", std::abs(limit - boundary) / scale, Relation::less,
            p.number("tol"));
  ctx.check("|limit - Bose spectral integral| / |limit|", std::abs(limit - spectral) / scale, Relation::less,
            p.number("tol"));
  ctx.check("detailed balance of the outer spectrum", balance, Relation::less, p.number("balance_tol"));
  ctx.check("fitted beta / beta_H - 1", std::abs(spec.fitted_beta() / spec.beta - 1), Relation::less,
            p.number("balance_tol"));
  ctx.check("cross-horizon kernel transform against pi E / sinh(beta E / 2)", weight, Relation::less,
            p.number("weight_tol"));
  ctx.check("cross-horizon limit: spectral against direct", std::abs(cs - cd_) / std::abs(cd_), Relation::less,
            p.number("tol"));
}

}  // namespace

void register_algebra_experiments(std::vector<Experiment>& out) {
  out.push_back({"star-algebra",
                 "Truncated star products: CCR, deformation inverse, homomorphism, divergence guard",
                 {{"nodes", "14", "functional grid size"},
                  {"trials", "10", "random functional families"},
                  {"ccr_tol", "1e-10", ""},
                  {"inverse_tol", "1e-10", ""},
                  {"homomorphism_tol", "1e-8", ""}},
                 star_algebra});
  out.push_back({"cone-restriction",
                 "Symplectic form on the past light cone against the bulk causal propagator",
                 {{"t_c", "4", "cone half height"},
                  {"samples", "801", "trace samples along V"},
                  {"pairs", "4", "random pairs near the cone axis"},
                  {"tol", "1e-3", "relative bound"}},
                 cone_restriction});
  out.push_back({"tunneling",
                 "Tunneling estimate across a Killing horizon and the fitted Hawking slope",
                 {{"M", "1", "black-hole mass; kappa = 1/4M"},
                  {"kappa", "0", "surface gravity override (0: from M)"},
                  {"energies", "4,6,8,10", "packet energies in units of 1/beta_H"},
                  {"sigma_beta", "2", "packet width in log V, in units of beta_H"},
                  {"tol", "0.05", "relative slope tolerance"}},
                 tunneling});
  out.push_back({"horizon-limit",
                 "Scaling limit of near-horizon correlations and the outer thermal spectrum",
                 {{"kappa", "1", "surface gravity"},
                  {"E0", "4", "packet energy"},
                  {"sigma_tau", "0.3", "packet width in log V"},
                  {"lambdas", "1,0.5,0.25,0.125", "scaling ladder"},
                  {"dv", "0.005", "V-grid step of the boundary smearing"},
                  {"tol", "1e-4", "relative agreement of the limit paths"},
                  {"balance_tol", "1e-10", ""},
                  {"weight_tol", "1e-6", ""}},
                 horizon_limit});
}

}  // namespace qfcs::harness::detail
