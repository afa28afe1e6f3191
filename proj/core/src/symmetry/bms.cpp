#include "qfcs/symmetry/bms.hpp"

#include "qfcs/error.hpp"

namespace qfcs::symmetry {

using geometry::SpherePoint;

NullPoint bms_act(const BMSElement& g, const NullPoint& x) {
  return {k_factor(g.lorentz, x.p) * (x.u + g.f(x.p)), g.lorentz.act(x.p)};
}

BMSElement bms_compose(const BMSElement& g_prime, const BMSElement& g) {
  const LorentzElement lambda = g.lorentz;
  const LorentzElement lambda_inv = lambda.inverse();
  const SphereFunction f = g.f;
  const SphereFunction fp = g_prime.f;
  if (lambda.distance(LorentzElement::identity()) == 0.0 && f.coefficients() && fp.coefficients())
    return {g_prime.lorentz * lambda, f + fp};
  auto composed = SphereFunction::closure([=](const SpherePoint& p) {
    const SpherePoint q = lambda.act(p);
    return f(p) + k_factor(lambda_inv, q) * fp(q);
  });
  return {g_prime.lorentz * lambda, std::move(composed)};
}

BMSElement bms_inverse(const BMSElement& g) {
  const LorentzElement lambda = g.lorentz;
  const LorentzElement lambda_inv = lambda.inverse();
  if (lambda.distance(LorentzElement::identity()) == 0.0) return {lambda_inv, -g.f};
  const SphereFunction f = g.f;
  auto inv = SphereFunction::closure([=](const SpherePoint& eta) {
    const SpherePoint p = lambda_inv.act(eta);
    return -f(p) * k_factor(lambda, p);
  });
  return {lambda_inv, std::move(inv)};
}

ProjectedBMS bms_compose_projected(const BMSElement& g_prime, const BMSElement& g, int l_max) {
  const BMSElement exact = bms_compose(g_prime, g);
  auto proj = project(exact.f, l_max);
  return {{exact.lorentz, std::move(proj.function)}, proj.discarded_norm};
}

bool is_T4(const SphereFunction& f, double tol) {
  const auto& coeffs = f.coefficients();
  if (!coeffs) throw DomainError("is_T4: needs a harmonic expansion; project first");
  double high = 0.0, total = 0.0;
  for (const auto& c : *coeffs) {
    total += std::norm(c.value);
    if (c.l >= 2) high += std::norm(c.value);
  }
  if (total == 0.0) return true;
  return high < tol * tol * total;
}

SphereFunction random_supertranslation(harness::CounterRng& rng, int l_max, double scale) {
  std::vector<HarmonicCoefficient> c;
  for (int l = 0; l <= l_max; ++l) {
    c.push_back({l, 0, scale * rng.normal()});
    for (int m = 1; m <= l; ++m) c.push_back({l, m, scale * cd(rng.normal(), rng.normal())});
  }
  return SphereFunction::harmonics(std::move(c));
}

}  // namespace qfcs::symmetry
