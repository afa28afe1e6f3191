#pragma once

#include <complex>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "qfcs/geometry/sphere.hpp"

namespace qfcs::symmetry {

struct HarmonicCoefficient {
  int l;
  int m;
  std::complex<double> value;
};

// Real function on the sphere. Either a finite harmonic expansion (coefficients
// available) or an exact closure built from other sphere functions.
class SphereFunction {
 public:
  SphereFunction();  // zero

  static SphereFunction constant(double c);
  // Validates the reality constraint a_{l,-m} = (-1)^m conj(a_{lm}) to 1e-12; missing
  // negative-m partners are filled in.
  static SphereFunction harmonics(std::vector<HarmonicCoefficient> coefficients);
  static SphereFunction closure(std::function<double(const geometry::SpherePoint&)> f);

  double operator()(const geometry::SpherePoint& p) const { return eval_(p); }

  // Harmonic coefficients with both signs of m, or nullopt for closures.
  const std::optional<std::vector<HarmonicCoefficient>>& coefficients() const { return coeffs_; }
  int l_max() const;

  SphereFunction operator-() const;
  friend SphereFunction operator+(const SphereFunction& f, const SphereFunction& g);

 private:
  std::function<double(const geometry::SpherePoint&)> eval_;
  std::optional<std::vector<HarmonicCoefficient>> coeffs_;
};

struct Projection {
  SphereFunction function;
  double discarded_norm;  // L2 norm of the part above l_max
};

// Harmonic analysis on an oversampled grid; keeps l <= l_max.
Projection project(const SphereFunction& f, int l_max);

}  // namespace qfcs::symmetry
