#include <algorithm>
#include <cmath>
#include <numeric>

#include "qfcs/bulk/causal_propagator.hpp"
#include "qfcs/bulk/quasifree.hpp"
#include "qfcs/bulk/two_point.hpp"
#include "qfcs/error.hpp"
#include "registry.hpp"

namespace qfcs::harness::detail {

namespace {

using cd = std::complex<double>;

// Every permutation that lists pairs (a < b) with increasing first entries, i.e. each
// pair partition exactly once.
cd brute_force_npoint(std::size_t n, const std::function<cd(std::size_t, std::size_t)>& w2,
                      std::size_t& count) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  cd sum = 0;
  count = 0;
  do {
    bool ok = true;
    for (std::size_t i = 0; i + 1 < n && ok; i += 2) {
      if (perm[i] > perm[i + 1]) ok = false;
      if (i >= 2 && perm[i - 2] > perm[i]) ok = false;
    }
    if (!ok) continue;
    cd term = 1;
    for (std::size_t i = 0; i + 1 < n; i += 2) term *= w2(perm[i], perm[i + 1]);
    sum += term;
    ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return sum;
}

void quasifree(Context& ctx) {
  const auto& p = ctx.params();
  auto& rng = ctx.rng();
  Table t("quasifree", {"n", "pairings", "assembled_re", "assembled_im", "brute_re", "brute_im", "relative_gap"});
  double worst = 0;
  const auto trials = static_cast<std::size_t>(p.integer("trials"));
  for (std::size_t n : {4u, 6u}) {
    for (std::size_t trial = 0; trial < trials; ++trial) {
      std::vector<cd> m(n * n);
      for (auto& x : m) x = {rng.uniform(-1, 1), rng.uniform(-1, 1)};
      auto w2 = [&](std::size_t i, std::size_t j) { return m[i * n + j]; };
      std::size_t count = 0;
      const cd brute = brute_force_npoint(n, w2, count);
      const cd assembled = bulk::npoint_quasifree(w2, n);
      const double gap = std::abs(assembled - brute) / std::max(1.0, std::abs(brute));
      worst = std::max(worst, gap);
      t.add_row({static_cast<double>(n), static_cast<double>(count), assembled.real(), assembled.imag(), brute.real(),
                 brute.imag(), gap});
    }
  }
  ctx.add_table(std::move(t));
  ctx.check("n = 4, 6 assembly against pairing enumeration", worst, Relation::less, p.number("tol"));
  ctx.check("pairing count n = 4", static_cast<double>(bulk::pairing_count(4)), Relation::equal, 3);
  ctx.check("pairing count n = 6", static_cast<double>(bulk::pairing_count(6)), Relation::equal, 15);
  ctx.check("enumerated pairings n = 6", static_cast<double>(bulk::ordered_pairings(6).size()), Relation::equal, 15);
}

struct StateStats {
  double commutator = 0;
  double positivity = 0;
  double cauchy_schwarz = 0;
};

void positivity(Context& ctx) {
  const auto& p = ctx.params();
  const auto pairs = static_cast<std::size_t>(p.integer("pairs"));
  const double tol = p.number("tol");
  const double beta = p.number("beta");
  const double hubble = p.number("hubble");
  const modes::NuParameter nu{p.number("nu")};
  const bulk::SmearingBox mbox{-4, 4, 8};
  const bulk::SmearingBox dbox{-8, -0.5, 4};
  const bulk::ModeSmearing mink(bulk::ModeFamily::minkowski(), mbox);
  const bulk::ModeSmearing frw(bulk::ModeFamily::de_sitter(hubble, nu), dbox);
  const double nu2 = nu.value.real() * nu.value.real();
  auto potential = [nu2](double t) { return (0.25 - nu2) / (t * t); };
  auto a3 = [hubble](double t) { return std::pow(-1.0 / (hubble * t), 3); };
  bulk::PropagatorOptions dalembert;
  dalembert.panel_width = 0.5;
  bulk::LeapfrogOptions leapfrog;
  leapfrog.dr = 0.04;

  Table t("positivity", {"state", "pair", "omega_ff", "omega_gg", "re_omega_fg", "im_omega_fg", "G", "commutator_gap",
                         "positivity_ratio"});
  auto record = [&](const std::string& state, std::size_t i, cd wff, cd wgg, cd wfg, cd wgf, double g, StateStats& s) {
    const double norm = std::sqrt(wff.real() * wgg.real());
    const double gap = std::abs(wfg - wgf - cd(0, g)) / norm;
    const double ratio = 0.25 * g * g / (wff.real() * wgg.real());
    s.commutator = std::max(s.commutator, gap);
    s.positivity = std::max(s.positivity, ratio);
    s.cauchy_schwarz = std::max(s.cauchy_schwarz, std::norm(wfg) / (wff.real() * wgg.real()));
    t.add_row({state, static_cast<double>(i), wff.real(), wgg.real(), wfg.real(), wfg.imag(), g, gap, ratio});
  };

  StateStats sm, sv, st;
  auto& rng = ctx.rng();
  for (std::size_t i = 0; i < pairs; ++i) {
    const auto f = bulk::random_test_function(rng, mbox), g = bulk::random_test_function(rng, mbox);
    const auto bf = mink.transform(f), bg = mink.transform(g);
    record("minkowskiVacuum", i, mink.vacuum(bf, bf), mink.vacuum(bg, bg), mink.vacuum(bf, bg), mink.vacuum(bg, bf),
           bulk::minkowski_causal_propagator(f, g, dalembert), sm);
  }
  for (std::size_t i = 0; i < pairs; ++i) {
    const auto f = bulk::random_test_function(rng, dbox), g = bulk::random_test_function(rng, dbox);
    const auto bf = frw.transform(f), bg = frw.transform(g);
    const double gfg = bulk::leapfrog_causal_propagator(potential, f.times(a3), g.times(a3), leapfrog);
    record("frwVacuum", i, frw.vacuum(bf, bf), frw.vacuum(bg, bg), frw.vacuum(bf, bg), frw.vacuum(bg, bf), gfg, sv);
    record("frwThermal", i, frw.thermal(bf, bf, beta), frw.thermal(bg, bg, beta), frw.thermal(bf, bg, beta),
           frw.thermal(bg, bf, beta), gfg, st);
  }
  ctx.add_table(std::move(t));
  for (const auto& [name, s] : {std::pair{"minkowskiVacuum", sm}, {"frwVacuum", sv}, {"frwThermal", st}}) {
    ctx.check(std::string(name) + ": max |omega(f,g) - omega(g,f) - iG| / sqrt(omega(f,f) omega(g,g))",
              s.commutator, Relation::less, tol);
    ctx.check(std::string(name) + ": max |G|^2 / (4 omega(f,f) omega(g,g))", s.positivity, Relation::less_equal, 1.0);
    ctx.check(std::string(name) + ": max |omega(f,g)|^2 / (omega(f,f) omega(g,g))", s.cauchy_schwarz,
              Relation::less_equal, 1.0 + 1e-12);
  }
}

void conformal(Context& ctx) {
  const auto& p = ctx.params();
  const auto pairs = static_cast<std::size_t>(p.integer("pairs"));
  const double hubble = p.number("hubble");
  const double tol = p.number("tol");
  const bulk::SmearingBox box{-8, -0.5, 4};
  const auto ds = bulk::ModeFamily::de_sitter(hubble, {0.5});
  const bulk::ModeSmearing frw(ds, box);
  const bulk::ModeSmearing mink(bulk::ModeFamily::minkowski(), box);
  auto a = ds.a;
  auto a3 = [a](double t) { return std::pow(a(t), 3); };
  auto& rng = ctx.rng();

  Table t("conformal", {"kind", "index", "frw_re", "frw_im", "rescaled_re", "rescaled_im", "relative_gap"});
  double smeared = 0, pointwise = 0;
  for (std::size_t i = 0; i < pairs; ++i) {
    const auto f = bulk::random_test_function(rng, box), g = bulk::random_test_function(rng, box);
    const auto bf = frw.transform(f), bg = frw.transform(g);
    const cd w = frw.vacuum(bf, bg);
    const double norm = std::sqrt(frw.vacuum(bf, bf).real() * frw.vacuum(bg, bg).real());
    const cd m = mink.vacuum(f.times(a3), g.times(a3));
    const double gap = std::abs(w - m) / norm;
    smeared = std::max(smeared, gap);
    t.add_row({std::string("smeared"), static_cast<double>(i), w.real(), w.imag(), m.real(), m.imag(), gap});
  }
  const double eps = p.number("eps");
  const auto vac = bulk::minkowski_vacuum_2pt();
  for (std::size_t i = 0; i < pairs; ++i) {
    const bulk::SpacetimePoint x{rng.uniform(-3, -0.5), {rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)}};
    const bulk::SpacetimePoint y{rng.uniform(-3, -0.5), {rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)}};
    const cd w = bulk::frw_two_point(ds, x, y, eps);
    const cd m = vac(x, y, eps) / (a(x.t) * a(y.t));
    const double gap = std::abs(w - m) / std::abs(m);
    pointwise = std::max(pointwise, gap);
    t.add_row({std::string("pointwise"), static_cast<double>(i), w.real(), w.imag(), m.real(), m.imag(), gap});
  }
  ctx.add_table(std::move(t));
  ctx.check("smeared |omega_FRW - omega_M(a^3 f, a^3 g)| / norm", smeared, Relation::less, tol);
  ctx.check("pointwise |omega_FRW - omega_M / (a a')| / |omega_M / (a a')|", pointwise, Relation::less, tol);
}

}  // namespace

void register_bulk_experiments(std::vector<Experiment>& out) {
  out.push_back({"quasifree",
                 "Quasi-free n-point assembly against brute-force pairing enumeration",
                 {{"trials", "20", "random two-point matrices per n"}, {"tol", "1e-12", "relative bound"}},
                 quasifree});
  out.push_back({"positivity",
                 "Positivity and commutator consistency on random smeared pairs",
                 {{"pairs", "100", "random pairs per state"},
                  {"hubble", "1", "de Sitter rate of the FRW states"},
                  {"nu", "0.4", "de Sitter index of the FRW states"},
                  {"beta", "2", "inverse temperature of frwThermal"},
                  {"tol", "1e-3", "smearing tolerance of the commutator check"}},
                 positivity});
  out.push_back({"conformal",
                 "Massless conformally coupled FRW two-point function against (a a')^-1 Minkowski",
                 {{"pairs", "10", "random smeared pairs and random point pairs"},
                  {"hubble", "1", "de Sitter rate"},
                  {"eps", "0.05", "regulator of the pointwise comparison"},
                  {"tol", "1e-4", "relative bound"}},
                 conformal});
}

}  // namespace qfcs::harness::detail
