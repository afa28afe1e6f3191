#pragma once

#include <functional>
#include <limits>
#include <string>
#include <variant>
#include <vector>

#include "qfcs/numeric/spline.hpp"

namespace qfcs::geometry {

struct Interval {
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();

  bool contains(double x) const { return x > lo && x < hi; }
};

enum class CosmologyKind { deSitter, powerLaw, constant, custom };

std::string to_string(CosmologyKind kind);
CosmologyKind cosmology_kind_from_string(const std::string& name);

// Scale factor a(tau) of a spatially flat FRW metric in conformal time.
class CosmologyModel {
 public:
  // a = -1/(H tau) on (-inf, 0).
  static CosmologyModel de_sitter(double hubble);
  // a = a0 (-tau)^p on (-inf, 0).
  static CosmologyModel power_law(double a0, double exponent);
  static CosmologyModel constant(double a0);
  // Sampled table (tau ascending, a > 0), interpolated by a natural cubic spline.
  static CosmologyModel custom(std::vector<double> tau, std::vector<double> a);
  // Reads two numeric columns (tau, a) from a text file.
  static CosmologyModel custom_from_file(const std::string& path);

  CosmologyKind kind() const { return kind_; }
  const Interval& domain() const { return domain_; }
  // Hubble rate of the de Sitter preset, NaN otherwise.
  double hubble() const { return hubble_; }

  double a(double tau) const;
  double a_prime(double tau) const;
  double a_double_prime(double tau) const;
  // Ricci scalar R = 6 a'' / a^3.
  double ricci(double tau) const;

 private:
  CosmologyModel() = default;
  void require(double tau) const;

  CosmologyKind kind_ = CosmologyKind::constant;
  Interval domain_;
  double hubble_ = std::numeric_limits<double>::quiet_NaN();
  double a0_ = 1.0;
  double exponent_ = 0.0;
  numeric::CubicSpline table_;
};

// Scale factor as a function of proper time t, on [t_lo, t_hi].
struct ProperTimeScaleFactor {
  std::function<double(double)> a;
  double t_lo;
  double t_hi;

  static ProperTimeScaleFactor exponential(double a0, double alpha);
  static ProperTimeScaleFactor constant(double a0);
};

// tau(t) = d + int_0^t ds / a(s), adaptive quadrature with absolute tolerance 1e-10.
double conformal_time(const ProperTimeScaleFactor& model, double t, double d);

}  // namespace qfcs::geometry
