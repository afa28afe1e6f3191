#include "qfcs/numeric/spline.hpp"

#include <algorithm>

#include "qfcs/error.hpp"

namespace qfcs::numeric {

CubicSpline::CubicSpline(std::vector<double> x, std::vector<double> y)
    : x_(std::move(x)), y_(std::move(y)) {
  const std::size_t n = x_.size();
  if (n < 2 || y_.size() != n) throw DomainError("CubicSpline: need matching samples, n >= 2");
  for (std::size_t i = 1; i < n; ++i)
    if (!(x_[i] > x_[i - 1])) throw DomainError("CubicSpline: abscissae must ascend strictly");

  m_.assign(n, 0.0);
  if (n > 2) {
    // Thomas algorithm for the natural spline system.
    std::vector<double> c(n, 0.0), d(n, 0.0);
    for (std::size_t i = 1; i + 1 < n; ++i) {
      const double h0 = x_[i] - x_[i - 1];
      const double h1 = x_[i + 1] - x_[i];
      const double a = h0 / 6.0;
      const double b = (h0 + h1) / 3.0;
      const double cc = h1 / 6.0;
      const double rhs = (y_[i + 1] - y_[i]) / h1 - (y_[i] - y_[i - 1]) / h0;
      const double denom = b - a * c[i - 1];
      c[i] = cc / denom;
      d[i] = (rhs - a * d[i - 1]) / denom;
    }
    for (std::size_t i = n - 2; i >= 1; --i) {
      m_[i] = d[i] - c[i] * m_[i + 1];
      if (i == 1) break;
    }
  }

  cumulative_.assign(n, 0.0);
  for (std::size_t i = 1; i < n; ++i) {
    const double h = x_[i] - x_[i - 1];
    cumulative_[i] = cumulative_[i - 1] + 0.5 * h * (y_[i - 1] + y_[i]) -
                     h * h * h * (m_[i - 1] + m_[i]) / 24.0;
  }
}

std::size_t CubicSpline::segment(double x) const {
  if (x <= x_.front()) return 0;
  if (x >= x_.back()) return x_.size() - 2;
  const auto it = std::upper_bound(x_.begin(), x_.end(), x);
  return static_cast<std::size_t>(it - x_.begin()) - 1;
}

double CubicSpline::operator()(double x) const {
  const std::size_t i = segment(x);
  const double h = x_[i + 1] - x_[i];
  const double a = (x_[i + 1] - x) / h;
  const double b = (x - x_[i]) / h;
  return a * y_[i] + b * y_[i + 1] +
         ((a * a * a - a) * m_[i] + (b * b * b - b) * m_[i + 1]) * h * h / 6.0;
}

double CubicSpline::derivative(double x) const {
  const std::size_t i = segment(x);
  const double h = x_[i + 1] - x_[i];
  const double a = (x_[i + 1] - x) / h;
  const double b = (x - x_[i]) / h;
  return (y_[i + 1] - y_[i]) / h +
         (-(3 * a * a - 1) * m_[i] + (3 * b * b - 1) * m_[i + 1]) * h / 6.0;
}

double CubicSpline::second_derivative(double x) const {
  const std::size_t i = segment(x);
  const double h = x_[i + 1] - x_[i];
  const double a = (x_[i + 1] - x) / h;
  const double b = (x - x_[i]) / h;
  return a * m_[i] + b * m_[i + 1];
}

double CubicSpline::integral(double x) const {
  const std::size_t i = segment(x);
  const double h = x_[i + 1] - x_[i];
  const double t = x - x_[i];
  // Integrate the segment polynomial from x_i to x.
  const double b = t / h;
  const double a_int = h * (b - 0.5 * b * b);      // int a
  const double b_int = 0.5 * h * b * b;             // int b
  const double a = 1.0 - b;
  const double a3_int = h * (1.0 - a * a * a * a) / 4.0 - a_int;  // int (a^3 - a)
  const double b3_int = h * b * b * b * b / 4.0 - b_int;          // int (b^3 - b)
  return cumulative_[i] + a_int * y_[i] + b_int * y_[i + 1] +
         (a3_int * m_[i] + b3_int * m_[i + 1]) * h * h / 6.0;
}

}  // namespace qfcs::numeric
