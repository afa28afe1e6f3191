#pragma once

#include <span>
#include <vector>

namespace qfcs::numeric {

// Natural cubic spline through (x_i, y_i), x strictly ascending.
class CubicSpline {
 public:
  CubicSpline() = default;
  CubicSpline(std::vector<double> x, std::vector<double> y);

  double operator()(double x) const;
  double derivative(double x) const;
  double second_derivative(double x) const;
  // Integral from x.front() to x.
  double integral(double x) const;

  double front() const { return x_.front(); }
  double back() const { return x_.back(); }

 private:
  std::size_t segment(double x) const;

  std::vector<double> x_;
  std::vector<double> y_;
  std::vector<double> m_;  // second derivatives at knots
  std::vector<double> cumulative_;
};

// Cubic Hermite interpolation on one interval from values and slopes.
struct HermiteSample {
  double x;
  double value;
  double slope;
};

template <class T>
T hermite(double x, double x0, double x1, const T& y0, const T& d0, const T& y1, const T& d1) {
  const double h = x1 - x0;
  const double t = (x - x0) / h;
  const double t2 = t * t;
  const double t3 = t2 * t;
  const double h00 = 2 * t3 - 3 * t2 + 1;
  const double h10 = t3 - 2 * t2 + t;
  const double h01 = -2 * t3 + 3 * t2;
  const double h11 = t3 - t2;
  return h00 * y0 + (h10 * h) * d0 + h01 * y1 + (h11 * h) * d1;
}

template <class T>
T hermite_slope(double x, double x0, double x1, const T& y0, const T& d0, const T& y1,
                const T& d1) {
  const double h = x1 - x0;
  const double t = (x - x0) / h;
  const double t2 = t * t;
  const double g00 = (6 * t2 - 6 * t) / h;
  const double g10 = 3 * t2 - 4 * t + 1;
  const double g01 = (-6 * t2 + 6 * t) / h;
  const double g11 = 3 * t2 - 2 * t;
  return g00 * y0 + g10 * d0 + g01 * y1 + g11 * d1;
}

}  // namespace qfcs::numeric
