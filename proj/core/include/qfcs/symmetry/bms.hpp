#pragma once

#include "qfcs/symmetry/lorentz.hpp"
#include "qfcs/symmetry/sphere_function.hpp"

namespace qfcs::symmetry {

struct NullPoint {
  double u;
  geometry::SpherePoint p;
};

// Element (Lambda, f) of the BMS group, a semidirect product of SL(2, C) with the
// supertranslations.
struct BMSElement {
  LorentzElement lorentz;
  SphereFunction f;

  static BMSElement identity() { return {}; }
};

// u' = K_Lambda(p) (u + f(p)), p' = Lambda p.
NullPoint bms_act(const BMSElement& g, const NullPoint& x);

// g' . g = (Lambda' Lambda, f + (K_{Lambda^-1} o Lambda) (f' o Lambda)), kept as an exact closure.
BMSElement bms_compose(const BMSElement& g_prime, const BMSElement& g);
BMSElement bms_inverse(const BMSElement& g);

struct ProjectedBMS {
  BMSElement element;
  double discarded_norm;
};

// Composition followed by projection of the supertranslation onto l <= l_max.
ProjectedBMS bms_compose_projected(const BMSElement& g_prime, const BMSElement& g, int l_max);

// True iff the l >= 2 part carries less than tol^2 of the squared coefficient norm.
bool is_T4(const SphereFunction& f, double tol);

// Supertranslation with Gaussian random coefficients for l <= l_max.
SphereFunction random_supertranslation(harness::CounterRng& rng, int l_max, double scale = 0.3);

}  // namespace qfcs::symmetry
