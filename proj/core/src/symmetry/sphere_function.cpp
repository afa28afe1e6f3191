#include "qfcs/symmetry/sphere_function.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "qfcs/error.hpp"

namespace qfcs::symmetry {

using geometry::SpherePoint;

SphereFunction::SphereFunction()
    : eval_([](const SpherePoint&) { return 0.0; }), coeffs_(std::vector<HarmonicCoefficient>{}) {}

SphereFunction SphereFunction::constant(double c) {
  // Y_00 = 1/sqrt(4 pi)
  return harmonics({{0, 0, c * std::sqrt(4 * std::numbers::pi)}});
}

SphereFunction SphereFunction::harmonics(std::vector<HarmonicCoefficient> coefficients) {
  std::map<std::pair<int, int>, std::complex<double>> table;
  for (const auto& c : coefficients) {
    if (c.l < 0 || std::abs(c.m) > c.l) throw DomainError("harmonic index out of range");
    table[{c.l, c.m}] += c.value;
  }
  for (const auto& [key, value] : std::map(table)) {
    const auto [l, m] = key;
    const double sign = (m % 2 == 0) ? 1.0 : -1.0;
    const std::complex<double> partner = sign * std::conj(value);
    auto it = table.find({l, -m});
    if (it == table.end()) {
      table[{l, -m}] = partner;
    } else if (std::abs(it->second - partner) > 1e-12 * std::max(1.0, std::abs(value))) {
      throw DomainError("supertranslation coefficients violate the reality constraint");
    }
  }
  SphereFunction f;
  std::vector<HarmonicCoefficient> full;
  for (const auto& [key, value] : table) full.push_back({key.first, key.second, value});
  // Evaluate as a_l0 Y_l0 + 2 Re sum_{m>0} a_lm Y_lm.
  std::vector<HarmonicCoefficient> half;
  for (const auto& c : full)
    if (c.m >= 0 && std::abs(c.value) > 0) half.push_back(c);
  f.eval_ = [half](const SpherePoint& p) {
    double sum = 0.0;
    for (const auto& c : half) {
      const double term = std::real(c.value * geometry::spherical_harmonic(c.l, c.m, p));
      sum += c.m == 0 ? term : 2.0 * term;
    }
    return sum;
  };
  f.coeffs_ = std::move(full);
  return f;
}

SphereFunction SphereFunction::closure(std::function<double(const SpherePoint&)> fn) {
  SphereFunction f;
  f.eval_ = std::move(fn);
  f.coeffs_.reset();
  return f;
}

int SphereFunction::l_max() const {
  if (!coeffs_) return -1;
  int l = 0;
  for (const auto& c : *coeffs_) l = std::max(l, c.l);
  return l;
}

SphereFunction SphereFunction::operator-() const {
  if (coeffs_) {
    auto c = *coeffs_;
    for (auto& x : c) x.value = -x.value;
    return harmonics(std::move(c));
  }
  auto e = eval_;
  return closure([e](const SpherePoint& p) { return -e(p); });
}

SphereFunction operator+(const SphereFunction& f, const SphereFunction& g) {
  if (f.coeffs_ && g.coeffs_) {
    auto c = *f.coeffs_;
    c.insert(c.end(), g.coeffs_->begin(), g.coeffs_->end());
    return SphereFunction::harmonics(std::move(c));
  }
  auto a = f.eval_;
  auto b = g.eval_;
  return SphereFunction::closure([a, b](const SpherePoint& p) { return a(p) + b(p); });
}

Projection project(const SphereFunction& f, int l_max) {
  const geometry::SphereGrid grid(std::max(4 * l_max, 16));
  std::vector<double> values(grid.size());
  double total = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    values[i] = f(grid.points()[i]);
    total += grid.weights()[i] * values[i] * values[i];
  }
  std::vector<HarmonicCoefficient> kept;
  double kept_norm = 0.0;
  for (int l = 0; l <= l_max; ++l) {
    for (int m = 0; m <= l; ++m) {
      std::complex<double> a{};
      for (std::size_t i = 0; i < grid.size(); ++i)
        a += grid.weights()[i] * values[i] *
             std::conj(geometry::spherical_harmonic(l, m, grid.points()[i]));
      kept.push_back({l, m, a});
      kept_norm += (m == 0 ? 1.0 : 2.0) * std::norm(a);
    }
  }
  return {SphereFunction::harmonics(std::move(kept)), std::sqrt(std::max(0.0, total - kept_norm))};
}

}  // namespace qfcs::symmetry
