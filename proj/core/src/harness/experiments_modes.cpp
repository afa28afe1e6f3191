#include <cmath>
#include <numbers>

#include "qfcs/error.hpp"
#include "qfcs/modes/de_sitter.hpp"
#include "qfcs/modes/solver.hpp"
#include "registry.hpp"

namespace qfcs::harness::detail {

using cd = std::complex<double>;

cd parse_complex(const std::string& text) {
  if (text.empty()) throw ConfigError("empty complex number");
  if (text.back() != 'i') return {parse_number(text, "complex"), 0.0};
  const std::string body = text.substr(0, text.size() - 1);
  const auto split = body.find_last_of("+-");
  if (split == std::string::npos || split == 0)
    return {0.0, body.empty() || body == "+" ? 1.0 : body == "-" ? -1.0 : parse_number(body, "complex")};
  return {parse_number(body.substr(0, split), "complex"), parse_number(body.substr(split), "complex")};
}

namespace {

std::string label(cd nu) {
  return nu.imag() == 0 ? format_number(nu.real()) : format_number(nu.real()) + "+" + format_number(nu.imag()) + "i";
}

void wronskian(Context& ctx) {
  const auto& p = ctx.params();
  if (p.text("cosmology") != "deSitter")
    throw ConfigError("wronskian: only the deSitter cosmology carries a reference index");
  const auto ks = p.range("k").geometric();
  const auto tr = p.range("tau");
  const auto grid = tr.linear();
  const double tol = p.number("tol");

  struct Case {
    std::string name;
    modes::ModePotential potential;
    cd nu;
  };
  std::vector<Case> cases;
  for (const auto& w : p.words("nu")) {
    const cd nu = parse_complex(w);
    cases.push_back({"deSitter", modes::ModePotential::de_sitter({nu}), nu});
  }
  if (p.flag("perturbed")) {
    const cd n1{0.4, 0}, n2{1.5, 0};
    cases.push_back({"perturbedCubic",
                     modes::ModePotential::perturbed_de_sitter({n1}, [](double t) { return 1.0 / (t * t * t); }, 3),
                     n1});
    cases.push_back({"perturbedLorentzian",
                     modes::ModePotential::perturbed_de_sitter(
                         {n2}, [](double t) { return 2.0 / ((1 + t * t) * (1 + t * t)); }, 4),
                     n2});
  }

  Table t("wronskian", {"potential", "nu", "k", "max_drift"});
  double worst = 0;
  for (const auto& c : cases)
    for (double k : ks) {
      double tau0 = tr.lo;
      while (c.potential.reference() && !(std::abs(c.potential.delta(tau0)) < 1e-9 * k * k)) tau0 *= 2;
      const auto m = modes::solve_mode(c.potential, k, grid, modes::AsymptoticVacuum{tau0});
      const double d = modes::max_wronskian_drift(m);
      worst = std::max(worst, d);
      t.add_row({c.name, label(c.nu), k, d});
    }
  ctx.add_table(std::move(t));
  ctx.check("max |W + i| over potentials, k and tau", worst, Relation::less, tol);
}

void nu_values(Context& ctx) {
  Table t("nu_values", {"m_over_H", "xi", "hubble", "nu_re", "nu_im", "expected"});
  struct Row {
    double m, xi, h, expected;
  };
  const Row rows[] = {{0, 0, 1, 1.5}, {0, 1.0 / 6.0, 1, 0.5}, {1.5, 0, 1, 0.0}};
  const char* names[] = {"nu(0, 0, 1)", "nu(0, 1/6, 1)", "nu(m^2/H^2 = 9/4, 0)"};
  for (std::size_t i = 0; i < 3; ++i) {
    const auto& r = rows[i];
    const cd nu = modes::nu_parameter(r.m, r.xi, r.h).value;
    t.add_row({r.m, r.xi, r.h, nu.real(), nu.imag(), r.expected});
    ctx.check(std::string(names[i]) + " deviation", std::abs(nu - r.expected), Relation::equal, 0.0);
  }
  ctx.add_table(std::move(t));
}

void desitter_closed_form(Context& ctx) {
  const auto& p = ctx.params();
  const auto n = static_cast<std::size_t>(p.integer("samples"));
  const double k_lo = p.number("k_min"), k_hi = p.number("k_max");
  const double t_lo = p.number("tau_min"), t_hi = p.number("tau_max");
  if (!(k_lo > 0 && k_hi > k_lo && t_lo < t_hi && t_hi < 0))
    throw ConfigError("desitter-closed-form: need 0 < k_min < k_max and tau_min < tau_max < 0");
  Table t("closed_form", {"k", "tau", "deviation"});
  double worst = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double k = k_lo * std::pow(k_hi / k_lo, ctx.rng().uniform());
    const double tau = t_hi * std::pow(t_lo / t_hi, ctx.rng().uniform());
    const cd exact = std::exp(cd(0, -k * tau)) / std::sqrt(2 * k);
    const double d = std::abs(modes::ds_mode(k, tau, {0.5}).chi - exact);
    worst = std::max(worst, d);
    t.add_row({k, tau, d});
  }
  ctx.add_table(std::move(t));
  ctx.check("max |chi - e^{-ik tau}/sqrt(2k)| at nu = 1/2", worst, Relation::less, p.number("tol"));
}

}  // namespace

void register_mode_experiments(std::vector<Experiment>& out) {
  out.push_back({"wronskian",
                 "Wronskian drift of solved modes on de Sitter and perturbed potentials",
                 {{"cosmology", "deSitter", "background preset"},
                  {"nu", "0.5,1.5,0.4,0.8i", "de Sitter indices (suffix i for imaginary)"},
                  {"k", "0.1:10:32", "wavenumbers lo:hi:n, geometric"},
                  {"tau", "-100:-0.1:2001", "conformal-time grid lo:hi:n"},
                  {"perturbed", "true", "add two perturbed de Sitter potentials"},
                  {"tol", "1e-8", "bound on max |W + i|"}},
                 wronskian});
  out.push_back({"nu-values", "Exact spot values of the de Sitter index", {}, nu_values});
  out.push_back({"desitter-closed-form",
                 "nu = 1/2 de Sitter mode against e^{-ik tau}/sqrt(2k) at random points",
                 {{"samples", "100", "number of random (k, tau)"},
                  {"k_min", "0.1", "k range, log-uniform"},
                  {"k_max", "10", ""},
                  {"tau_min", "-100", "tau range, log-uniform in -tau"},
                  {"tau_max", "-0.1", ""},
                  {"tol", "1e-10", "bound on the deviation"}},
                 desitter_closed_form});
}

}  // namespace qfcs::harness::detail
