#include <cmath>
#include <numbers>

#include "qfcs/hadamard/parametrix.hpp"
#include "qfcs/microlocal/wavefront.hpp"
#include "registry.hpp"

namespace qfcs::harness::detail {

namespace {

using cd = std::complex<double>;

void add_report(Table& t, const std::string& label, const hadamard::HadamardReport& r) {
  for (std::size_t i = 0; i < r.separations.size(); ++i)
    t.add_row({label, r.separations[i], r.residuals[i], r.parametrix_values[i]});
}

void hadamard_check(Context& ctx) {
  const auto& p = ctx.params();
  hadamard::ProbeWindow probe;
  probe.r0 = p.number("r0");
  probe.levels = static_cast<std::size_t>(p.integer("levels"));
  Table t("hadamard", {"case", "separation", "residual", "parametrix"});

  const auto flat = hadamard::hadamard_difference(bulk::minkowski_vacuum_2pt(),
                                                  hadamard::HadamardParametrix::minkowski_massless(), probe);
  add_report(t, "minkowskiMassless", flat);
  ctx.check("Minkowski massless: max |omega_2 - H|", flat.max_residual, Relation::less, p.number("flat_tol"));

  const auto massive = hadamard::hadamard_difference(bulk::massive_minkowski_2pt(p.number("mass")),
                                                     hadamard::HadamardParametrix::minkowski_truncated(), probe);
  add_report(t, "minkowskiMassive", massive);
  ctx.check("massive: growth exponent of |omega_2 - H|", massive.growth_exponent, Relation::greater_equal,
            p.number("min_exponent"));
  ctx.check("massive: max |omega_2 - H| / log(1/r)", massive.max_log_ratio, Relation::less_equal,
            p.number("log_bound"));

  hadamard::ProbeWindow dprobe = probe;
  dprobe.base = {-1.0, {0, 0, 0}};
  const auto fam = bulk::ModeFamily::de_sitter(p.number("hubble"), {0.5});
  const auto ds = hadamard::hadamard_difference(bulk::frw_vacuum_kernel(fam),
                                                hadamard::HadamardParametrix::conformally_rescaled(fam.a), dprobe);
  add_report(t, "deSitterConformal", ds);
  ctx.check("de Sitter conformal: growth exponent of |omega_2 - H|", ds.growth_exponent, Relation::greater_equal,
            p.number("min_exponent"));
  ctx.check("de Sitter conformal: max |omega_2 - H|", ds.max_residual, Relation::less, p.number("bounded_tol"));
  ctx.add_table(std::move(t));
}

void microlocal_check(Context& ctx) {
  const auto& p = ctx.params();
  const auto n = static_cast<std::size_t>(p.integer("points"));
  const double du = p.number("du");
  const double eps = p.number("eps_steps") * du;
  const double u0 = -0.5 * du * static_cast<double>(n);
  const double pi = std::numbers::pi;
  const auto vac = microlocal::SampledKernel2D::sample(
      u0, du, n, eps, [&](double u, double v) { return -1.0 / pi / std::pow(cd(u - v, -eps), 2); });
  std::vector<microlocal::WindowCenter> centers;
  for (double c : p.numbers("centers")) centers.push_back({c, c});

  Table t("microlocal", {"kernel", "u", "up", "score", "singular_mass", "verdict"});
  auto add = [&](const std::string& name, const std::vector<microlocal::WFReport>& rs) {
    for (const auto& r : rs)
      t.add_row({name, r.center.u, r.center.up, r.orientation_score, r.singular_mass, microlocal::to_string(r.verdict)});
  };
  const auto rv = microlocal::msc_orientation(vac, centers);
  const auto rc = microlocal::msc_orientation(vac.conjugate(), centers);
  const auto smooth = microlocal::SampledKernel2D::sample(
      u0, du, n, eps, [](double u, double v) { return cd(std::exp(-(u * u + v * v) / 0.5), 0); });
  const auto rs = microlocal::msc_orientation(smooth, {{0, 0}});
  add("vacuum", rv);
  add("conjugate", rc);
  add("smooth", rs);
  ctx.add_table(std::move(t));

  double vmin = 1, cmax = 0;
  for (const auto& r : rv) vmin = std::min(vmin, r.orientation_score);
  for (const auto& r : rc) cmax = std::max(cmax, r.orientation_score);
  ctx.check("vacuum kernel: min orientation score", vmin, Relation::greater_equal, p.number("pass_score"));
  ctx.check("conjugate kernel: max orientation score", cmax, Relation::less_equal, p.number("fail_score"));
  ctx.check("smooth kernel flagged regular", rs.front().verdict == microlocal::Verdict::regular ? 1.0 : 0.0,
            Relation::equal, 1.0);
}

}  // namespace

void register_local_experiments(std::vector<Experiment>& out) {
  out.push_back({"hadamard",
                 "Hadamard subtraction: Minkowski massless, massive log-bound, de Sitter conformal",
                 {{"r0", "0.5", "largest probe separation"},
                  {"levels", "15", "dyadic probe levels"},
                  {"mass", "1", "mass of the massive state"},
                  {"hubble", "1", "de Sitter rate"},
                  {"flat_tol", "1e-8", "bound on the massless residual"},
                  {"min_exponent", "-0.5", "smallest admissible growth exponent"},
                  {"log_bound", "1", "bound on |D| / log(1/r)"},
                  {"bounded_tol", "1e-6", "bound on the de Sitter residual"}},
                 hadamard_check});
  out.push_back({"microlocal",
                 "Windowed-Fourier orientation of boundary kernels",
                 {{"points", "256", "samples per axis"},
                  {"du", "0.05", "sample spacing"},
                  {"eps_steps", "4", "regulator in units of du"},
                  {"centers", "-1,-0.5,0,0.5,1", "diagonal window centers"},
                  {"pass_score", "0.99", ""},
                  {"fail_score", "0.01", ""}},
                 microlocal_check});
}

}  // namespace qfcs::harness::detail
