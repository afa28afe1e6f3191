#include "qfcs/symmetry/horizon_group.hpp"

#include <cmath>

#include "qfcs/error.hpp"

namespace qfcs::symmetry {

using geometry::SpherePoint;

geometry::SpherePoint rotate(const Eigen::Quaterniond& q, const SpherePoint& p) {
  const auto c = p.cartesian();
  const Eigen::Vector3d v = q * Eigen::Vector3d(c[0], c[1], c[2]);
  return SpherePoint::from_cartesian({v.x(), v.y(), v.z()});
}

HorizonSymElement HorizonSymElement::random(harness::CounterRng& rng, int l_max, double scale) {
  Eigen::Quaterniond q(rng.normal(), rng.normal(), rng.normal(), rng.normal());
  q.normalize();
  return {q, random_supertranslation(rng, l_max, scale), random_supertranslation(rng, l_max, scale)};
}

NullPoint sg_act(const HorizonSymElement& F, const NullPoint& x) {
  return {std::exp(F.a(x.p)) * x.u + F.b(x.p), rotate(F.rotation, x.p)};
}

HorizonSymElement sg_compose(const HorizonSymElement& F, const HorizonSymElement& F_prime) {
  const Eigen::Quaterniond rp = F_prime.rotation;
  const SphereFunction a = F.a, b = F.b, ap = F_prime.a, bp = F_prime.b;
  auto new_a = SphereFunction::closure(
      [=](const SpherePoint& p) { return ap(p) + a(rotate(rp, p)); });
  auto new_b = SphereFunction::closure([=](const SpherePoint& p) {
    const SpherePoint q = rotate(rp, p);
    return std::exp(a(q)) * bp(p) + b(q);
  });
  Eigen::Quaterniond r = F.rotation * rp;
  r.normalize();
  return {r, std::move(new_a), std::move(new_b)};
}

HorizonSymElement sg_inverse(const HorizonSymElement& F) {
  const Eigen::Quaterniond rinv = F.rotation.conjugate();
  const SphereFunction a = F.a, b = F.b;
  auto new_a = SphereFunction::closure([=](const SpherePoint& p) { return -a(rotate(rinv, p)); });
  auto new_b = SphereFunction::closure([=](const SpherePoint& p) {
    const SpherePoint q = rotate(rinv, p);
    return -std::exp(-a(q)) * b(q);
  });
  return {rinv, std::move(new_a), std::move(new_b)};
}

}  // namespace qfcs::symmetry
