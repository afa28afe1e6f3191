#include "qfcs/bulk/test_function.hpp"

#include <cmath>

#include "qfcs/error.hpp"

namespace qfcs::bulk {

namespace {
constexpr double support_widths = 8.0;
}

RadialTestFunction RadialTestFunction::gaussian(double amplitude, double tc, double rc, double width) {
  if (!(width > 0)) throw DomainError("gaussian test function: width must be positive");
  if (rc != 0.0 && rc < support_widths * width)
    throw DomainError("gaussian test function: shell too close to the origin");
  const double inv = 1.0 / (2 * width * width);
  return {[=](double t, double r) {
            const double dt = t - tc, dr = r - rc;
            const double e = (dt * dt + dr * dr) * inv;
            return e > support_widths * support_widths / 2 ? 0.0 : amplitude * std::exp(-e);
          },
          tc - support_widths * width, tc + support_widths * width, rc + support_widths * width};
}

RadialTestFunction RadialTestFunction::times(std::function<double(double)> weight) const {
  auto g = f;
  return {[g, weight](double t, double r) { return weight(t) * g(t, r); }, t_lo, t_hi, r_hi};
}

RadialTestFunction RadialTestFunction::scaled(double s) const {
  auto g = f;
  return {[g, s](double t, double r) { return s * g(t, r); }, t_lo, t_hi, r_hi};
}

bool SmearingBox::contains(const RadialTestFunction& f) const {
  return f.t_lo >= t_lo && f.t_hi <= t_hi && f.r_hi <= r_hi;
}

RadialTestFunction random_test_function(harness::CounterRng& rng, const SmearingBox& box,
                                        double min_width, double max_width) {
  const double w = rng.uniform(min_width, max_width);
  const double margin = support_widths * w;
  if (box.t_hi - box.t_lo < 2 * margin || box.r_hi < margin)
    throw DomainError("random_test_function: box too small for the requested widths");
  const double tc = rng.uniform(box.t_lo + margin, box.t_hi - margin);
  const bool shell = box.r_hi > 2 * margin && rng.uniform() < 0.5;
  const double rc = shell ? rng.uniform(margin, box.r_hi - margin) : 0.0;
  const double amp = rng.uniform(0.5, 1.5) * (rng.uniform() < 0.5 ? -1.0 : 1.0);
  return RadialTestFunction::gaussian(amp, tc, rc, w);
}

}  // namespace qfcs::bulk
