#include "qfcs/geometry/schwarzschild.hpp"

#include <cmath>
#include <string>

#include "qfcs/error.hpp"

namespace qfcs::geometry {

SchwarzschildChart::SchwarzschildChart(double mass) : m_(mass) {
  if (!(mass > 0) || !std::isfinite(mass)) throw DomainError("Schwarzschild mass must be positive");
}

double SchwarzschildChart::tortoise(double r) const {
  if (!(r > 0)) throw DomainError("tortoise: r must be positive");
  const double rs = 2 * m_;
  if (std::abs(r - rs) < 1e-12 * m_)
    throw SingularCoordinateError("tortoise: r = " + std::to_string(r) + " at the horizon");
  return r + rs * std::log(std::abs(r / rs - 1.0));
}

KruskalPoint SchwarzschildChart::kruskal_uv(KruskalRegion region, double t, double r) const {
  const double rs = 2 * m_;
  const double scale = 4 * m_;
  if (region == KruskalRegion::W) {
    if (!(r > rs)) throw DomainError("kruskal_uv: region W needs r > 2M");
    const double rstar = tortoise(r);
    return {-std::exp(-(t - rstar) / scale), std::exp((t + rstar) / scale)};
  }
  if (!(r > 0 && r < rs)) throw DomainError("kruskal_uv: region B needs 0 < r < 2M");
  const double rstar = tortoise(r);
  return {std::exp((rstar - t) / scale), std::exp((t + rstar) / scale)};
}

}  // namespace qfcs::geometry
