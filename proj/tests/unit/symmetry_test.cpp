#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "qfcs/error.hpp"
#include "qfcs/harness/rng.hpp"
#include "qfcs/symmetry/bms.hpp"
#include "qfcs/symmetry/horizon_group.hpp"

using namespace qfcs;
using namespace qfcs::symmetry;
using geometry::SpherePoint;
using std::numbers::pi;

namespace {

SpherePoint random_point(harness::CounterRng& rng) {
  return {std::acos(rng.uniform(-1, 1)), rng.uniform(0, 2 * pi)};
}

double point_distance(const SpherePoint& a, const SpherePoint& b) {
  const auto x = a.cartesian(), y = b.cartesian();
  return std::hypot(x[0] - y[0], x[1] - y[1], x[2] - y[2]);
}

}  // namespace

TEST(Lorentz, DeterminantGuardAndGroupLaws) {
  EXPECT_THROW(LorentzElement(1, 1, 0, 2), DomainError);
  harness::CounterRng rng(1);
  for (int i = 0; i < 50; ++i) {
    const auto a = LorentzElement::random(rng), b = LorentzElement::random(rng);
    EXPECT_LT((a * a.inverse()).distance(LorentzElement::identity()), 1e-12);
    const auto p = random_point(rng);
    EXPECT_LT(point_distance((a * b).act(p), a.act(b.act(p))), 1e-9);
  }
}

TEST(Lorentz, RotationsActIsometricallyWithUnitConformalFactor) {
  harness::CounterRng rng(2);
  for (int i = 0; i < 50; ++i) {
    const auto r = LorentzElement::random_rotation(rng);
    EXPECT_TRUE(r.is_rotation());
    const auto p = random_point(rng), q = random_point(rng);
    EXPECT_NEAR(point_distance(r.act(p), r.act(q)), point_distance(p, q), 1e-12);
    EXPECT_NEAR(k_factor(r, p), 1.0, 1e-12);
  }
  const auto z = LorentzElement::rotation({0, 0, 1}, pi / 2);
  const auto x = z.act(SpherePoint{pi / 2, 0}).cartesian();
  EXPECT_NEAR(std::abs(x[1]), 1.0, 1e-12);
}

TEST(Lorentz, BoostConformalFactorClosedForm) {
  // zeta -> e^{eta} zeta; K = (1 + |zeta|^2) / (e^{eta} |zeta|^2 + e^{-eta}).
  const double eta = 0.7;
  const auto b = LorentzElement::boost_z(eta);
  EXPECT_FALSE(b.is_rotation());
  for (double theta : {0.3, 1.2, 2.8}) {
    const SpherePoint p{theta, 0.4};
    const double z2 = std::pow(1 / std::tan(theta / 2), 2);
    EXPECT_NEAR(k_factor(b, p), (1 + z2) / (std::exp(eta) * z2 + std::exp(-eta)), 1e-12);
  }
}

TEST(Lorentz, ConformalFactorCocycle) {
  harness::CounterRng rng(3);
  for (int i = 0; i < 100; ++i) {
    const auto a = LorentzElement::random(rng), b = LorentzElement::random(rng);
    const auto p = random_point(rng);
    const double lhs = k_factor(a * b, p), rhs = k_factor(a, b.act(p)) * k_factor(b, p);
    EXPECT_NEAR(lhs, rhs, 1e-10 * rhs);
  }
}

TEST(Bms, GroupLawsOnPoints) {
  harness::CounterRng rng(4);
  for (int i = 0; i < 40; ++i) {
    const BMSElement g{LorentzElement::random(rng), random_supertranslation(rng, 4)};
    const BMSElement h{LorentzElement::random(rng), random_supertranslation(rng, 4)};
    const BMSElement k{LorentzElement::random(rng), random_supertranslation(rng, 4)};
    const NullPoint x{rng.uniform(-3, 3), random_point(rng)};
    const auto a = bms_act(bms_compose(h, g), x), b = bms_act(h, bms_act(g, x));
    EXPECT_NEAR(a.u, b.u, 1e-10 * (1 + std::abs(b.u)));
    EXPECT_LT(point_distance(a.p, b.p), 1e-10);
    const auto c = bms_act(bms_compose(bms_compose(k, h), g), x), d = bms_act(bms_compose(k, bms_compose(h, g)), x);
    EXPECT_NEAR(c.u, d.u, 1e-9 * (1 + std::abs(d.u)));
    const auto e = bms_act(bms_compose(bms_inverse(g), g), x);
    EXPECT_NEAR(e.u, x.u, 1e-10 * (1 + std::abs(x.u)));
    EXPECT_LT(point_distance(e.p, x.p), 1e-10);
  }
}

TEST(Bms, TranslationsFormTheLowHarmonics) {
  harness::CounterRng rng(6);
  EXPECT_TRUE(is_T4(random_supertranslation(rng, 1), 1e-12));
  EXPECT_FALSE(is_T4(random_supertranslation(rng, 3), 1e-3));
  // A rotation maps translations into translations.
  const BMSElement r{LorentzElement::random_rotation(rng), SphereFunction::constant(0)};
  const BMSElement t{LorentzElement::identity(), random_supertranslation(rng, 1)};
  const auto p = bms_compose_projected(bms_compose(r, t), bms_inverse(r), 4);
  EXPECT_TRUE(is_T4(p.element.f, 1e-10));
}

TEST(SphereFunctions, ProjectionRecoversCoefficients) {
  const auto f = SphereFunction::harmonics({{0, 0, 1.0}, {2, 1, cd(0.3, -0.2)}, {3, -2, cd(0.1, 0.4)}});
  const auto p = project(f, 4);
  EXPECT_LT(p.discarded_norm, 1e-12);
  harness::CounterRng rng(8);
  for (int i = 0; i < 20; ++i) {
    const auto x = random_point(rng);
    EXPECT_NEAR(p.function(x), f(x), 1e-12);
  }
  EXPECT_THROW(SphereFunction::harmonics({{1, 1, 1.0}, {1, -1, 1.0}}), Error);
  const auto trunc = project(f, 1);
  EXPECT_GT(trunc.discarded_norm, 0.1);
}

TEST(HorizonGroup, CompositionActsAsComposition) {
  harness::CounterRng rng(9);
  for (int i = 0; i < 30; ++i) {
    const auto F = HorizonSymElement::random(rng, 3), G = HorizonSymElement::random(rng, 3);
    const NullPoint x{rng.uniform(-2, 2), random_point(rng)};
    const auto a = sg_act(sg_compose(F, G), x), b = sg_act(F, sg_act(G, x));
    EXPECT_NEAR(a.u, b.u, 1e-10 * (1 + std::abs(b.u)));
    EXPECT_LT(point_distance(a.p, b.p), 1e-12);
    const auto e = sg_act(sg_compose(sg_inverse(F), F), x);
    EXPECT_NEAR(e.u, x.u, 1e-10 * (1 + std::abs(x.u)));
  }
}
