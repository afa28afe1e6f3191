#include "qfcs/wick/cone.hpp"

#include <numbers>

#include "qfcs/error.hpp"
#include "qfcs/numeric/finite_difference.hpp"
#include "qfcs/numeric/parallel.hpp"

namespace qfcs::wick {

ConeTrace pi_restriction(const bulk::RadialTestFunction& f, const DoubleCone& cone, std::size_t samples,
                         const bulk::PropagatorOptions& opt) {
  if (!(cone.t_c > 0) || samples < 16) throw DomainError("pi_restriction: need t_c > 0 and at least 16 samples");
  const double reach_up = f.t_hi + f.r_hi, reach_down = f.r_hi - f.t_lo;
  const double slack = 1e-2 * cone.t_c;
  if (reach_up >= cone.t_c || reach_down >= cone.t_c + slack)
    throw PreconditionError("pi_restriction: support is not interior to the double cone");
  ConeTrace out;
  out.t_c = cone.t_c;
  out.tip_warning = reach_down >= cone.t_c - slack;
  out.dv = 2 * cone.t_c / static_cast<double>(samples - 1);
  out.v.resize(samples);
  out.psi.resize(samples);
  const bulk::CausalField field(f, opt);
  numeric::parallel_for(samples, [&](std::size_t i) {
    const double v = -cone.t_c + out.dv * static_cast<double>(i);
    const double r = 0.5 * (v + cone.t_c), t = 0.5 * (v - cone.t_c);
    out.v[i] = v;
    out.psi[i] = r > 0 ? r * field(t, r) : 0.0;
  });
  return out;
}

double sigma_cone(const ConeTrace& a, const ConeTrace& b) {
  if (a.t_c != b.t_c || a.psi.size() != b.psi.size()) throw UsageError("sigma_cone: traces on different cones");
  const auto da = numeric::derivative_samples<double>(a.psi, a.dv);
  const auto db = numeric::derivative_samples<double>(b.psi, b.dv);
  double s = 0;
  const std::size_t n = a.psi.size();
  for (std::size_t i = 0; i < n; ++i) {
    const double term = a.psi[i] * db[i] - b.psi[i] * da[i];
    s += (i == 0 || i + 1 == n) ? 0.5 * term : term;
  }
  return 4 * std::numbers::pi * a.dv * s;
}

}  // namespace qfcs::wick
