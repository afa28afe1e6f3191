#pragma once

#include <numbers>

namespace qfcs::geometry {

enum class KruskalRegion { W, B };

struct KruskalPoint {
  double U;
  double V;
};

// Schwarzschild exterior W (r > 2M) and black-hole interior B (0 < r < 2M), G = c = 1.
class SchwarzschildChart {
 public:
  explicit SchwarzschildChart(double mass);

  double mass() const { return m_; }
  double schwarzschild_radius() const { return 2 * m_; }
  double surface_gravity() const { return 1.0 / (4 * m_); }
  double hawking_beta() const { return 8 * std::numbers::pi * m_; }

  // r* = r + 2M ln|r/2M - 1|. Rejects |r - 2M| < 1e-12 M.
  double tortoise(double r) const;

  // W: U = -exp(-u/4M), V = exp(v/4M), u = t - r*, v = t + r*.
  // B: U = exp(u/4M), V = exp(v/4M), u = r* - t, v = t + r*, so that UV = exp(r*/2M) -> 1 at r -> 0.
  KruskalPoint kruskal_uv(KruskalRegion region, double t, double r) const;

 private:
  double m_;
};

}  // namespace qfcs::geometry
