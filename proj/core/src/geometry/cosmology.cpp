#include "qfcs/geometry/cosmology.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "qfcs/error.hpp"
#include "qfcs/numeric/quadrature.hpp"

namespace qfcs::geometry {

std::string to_string(CosmologyKind kind) {
  switch (kind) {
    case CosmologyKind::deSitter: return "deSitter";
    case CosmologyKind::powerLaw: return "powerLaw";
    case CosmologyKind::constant: return "constant";
    case CosmologyKind::custom: return "custom";
  }
  return "unknown";
}

CosmologyKind cosmology_kind_from_string(const std::string& name) {
  if (name == "deSitter") return CosmologyKind::deSitter;
  if (name == "powerLaw") return CosmologyKind::powerLaw;
  if (name == "constant") return CosmologyKind::constant;
  if (name == "custom") return CosmologyKind::custom;
  throw ConfigError("unknown cosmology kind '" + name + "'");
}

CosmologyModel CosmologyModel::de_sitter(double hubble) {
  if (!(hubble > 0)) throw DomainError("de Sitter: H must be positive");
  CosmologyModel m;
  m.kind_ = CosmologyKind::deSitter;
  m.domain_ = {-std::numeric_limits<double>::infinity(), 0.0};
  m.hubble_ = hubble;
  return m;
}

CosmologyModel CosmologyModel::power_law(double a0, double exponent) {
  if (!(a0 > 0)) throw DomainError("power law: a0 must be positive");
  CosmologyModel m;
  m.kind_ = CosmologyKind::powerLaw;
  m.domain_ = {-std::numeric_limits<double>::infinity(), 0.0};
  m.a0_ = a0;
  m.exponent_ = exponent;
  return m;
}

CosmologyModel CosmologyModel::constant(double a0) {
  if (!(a0 > 0)) throw DomainError("constant: a0 must be positive");
  CosmologyModel m;
  m.kind_ = CosmologyKind::constant;
  m.a0_ = a0;
  return m;
}

CosmologyModel CosmologyModel::custom(std::vector<double> tau, std::vector<double> a) {
  if (tau.size() < 4 || tau.size() != a.size())
    throw DomainError("custom cosmology: need at least 4 (tau, a) samples");
  for (std::size_t i = 0; i < tau.size(); ++i) {
    if (!(a[i] > 0)) throw DomainError("custom cosmology: a must be positive");
    if (i > 0 && !(tau[i] > tau[i - 1]))
      throw DomainError("custom cosmology: tau must be strictly ascending");
  }
  CosmologyModel m;
  m.kind_ = CosmologyKind::custom;
  m.domain_ = {tau.front(), tau.back()};
  m.table_ = numeric::CubicSpline(std::move(tau), std::move(a));
  return m;
}

CosmologyModel CosmologyModel::custom_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open scale-factor table '" + path + "'");
  std::vector<double> tau, a;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream row(line);
    double t, v;
    if (!(row >> t >> v)) throw ConfigError("malformed row in '" + path + "': " + line);
    tau.push_back(t);
    a.push_back(v);
  }
  return custom(std::move(tau), std::move(a));
}

void CosmologyModel::require(double tau) const {
  if (kind_ == CosmologyKind::custom ? !(tau >= domain_.lo && tau <= domain_.hi)
                                     : !domain_.contains(tau))
    throw DomainError("conformal time " + std::to_string(tau) + " outside model domain");
}

double CosmologyModel::a(double tau) const {
  require(tau);
  switch (kind_) {
    case CosmologyKind::deSitter: return -1.0 / (hubble_ * tau);
    case CosmologyKind::powerLaw: return a0_ * std::pow(-tau, exponent_);
    case CosmologyKind::constant: return a0_;
    case CosmologyKind::custom: return table_(tau);
  }
  return 0;
}

double CosmologyModel::a_prime(double tau) const {
  require(tau);
  switch (kind_) {
    case CosmologyKind::deSitter: return 1.0 / (hubble_ * tau * tau);
    case CosmologyKind::powerLaw: return -a0_ * exponent_ * std::pow(-tau, exponent_ - 1);
    case CosmologyKind::constant: return 0.0;
    case CosmologyKind::custom: return table_.derivative(tau);
  }
  return 0;
}

double CosmologyModel::a_double_prime(double tau) const {
  require(tau);
  switch (kind_) {
    case CosmologyKind::deSitter: return -2.0 / (hubble_ * tau * tau * tau);
    case CosmologyKind::powerLaw:
      return a0_ * exponent_ * (exponent_ - 1) * std::pow(-tau, exponent_ - 2);
    case CosmologyKind::constant: return 0.0;
    case CosmologyKind::custom: return table_.second_derivative(tau);
  }
  return 0;
}

double CosmologyModel::ricci(double tau) const {
  const double s = a(tau);
  return 6.0 * a_double_prime(tau) / (s * s * s);
}

ProperTimeScaleFactor ProperTimeScaleFactor::exponential(double a0, double alpha) {
  return {[a0, alpha](double t) { return a0 * std::exp(alpha * t); },
          -std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
}

ProperTimeScaleFactor ProperTimeScaleFactor::constant(double a0) {
  return {[a0](double) { return a0; }, -std::numeric_limits<double>::infinity(),
          std::numeric_limits<double>::infinity()};
}

double conformal_time(const ProperTimeScaleFactor& model, double t, double d) {
  if (!(t >= model.t_lo && t <= model.t_hi) || !(0.0 >= model.t_lo && 0.0 <= model.t_hi))
    throw RangeError("conformal_time: t outside proper-time domain");
  if (t == 0.0) return d;
  const auto inv = [&](double s) {
    const double v = model.a(s);
    if (!(v > 0)) throw RangeError("conformal_time: scale factor not positive");
    return 1.0 / v;
  };
  const double lo = std::min(0.0, t), hi = std::max(0.0, t);
  const double val = numeric::integrate(inv, lo, hi, 1e-10, 1e-13);
  return d + (t > 0 ? val : -val);
}

}  // namespace qfcs::geometry
