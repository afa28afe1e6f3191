#include "qfcs/harness/rng.hpp"

#include <cmath>
#include <numbers>

namespace qfcs::harness {

double CounterRng::normal() {
  // Box-Muller; the sine branch is discarded so each normal costs exactly two draws.
  const double u1 = 1.0 - uniform();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2 * std::numbers::pi * u2);
}

}  // namespace qfcs::harness
