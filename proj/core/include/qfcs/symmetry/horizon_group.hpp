#pragma once

#include <Eigen/Geometry>

#include "qfcs/harness/rng.hpp"
#include "qfcs/symmetry/bms.hpp"

namespace qfcs::symmetry {

// Element (R, a, b) of the horizon symmetry group acting on R x S^2 by
// (u, p) -> (e^{a(p)} u + b(p), R p).
struct HorizonSymElement {
  Eigen::Quaterniond rotation = Eigen::Quaterniond::Identity();
  SphereFunction a;
  SphereFunction b;

  static HorizonSymElement identity() { return {}; }
  static HorizonSymElement random(harness::CounterRng& rng, int l_max, double scale = 0.3);
};

geometry::SpherePoint rotate(const Eigen::Quaterniond& q, const geometry::SpherePoint& p);

NullPoint sg_act(const HorizonSymElement& F, const NullPoint& x);
// (R R', a' + a o R', e^{a o R'} b' + b o R')
HorizonSymElement sg_compose(const HorizonSymElement& F, const HorizonSymElement& F_prime);
HorizonSymElement sg_inverse(const HorizonSymElement& F);

}  // namespace qfcs::symmetry
