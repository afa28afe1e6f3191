#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace qfcs::numeric {

// Central first-derivative weights for orders 2, 4, 6, 8 (offsets 1..order/2;
// the weight of -j is the negative of the weight of +j).
inline std::span<const double> central_first_weights(int order) {
  static constexpr std::array<double, 1> w2{1.0 / 2};
  static constexpr std::array<double, 2> w4{2.0 / 3, -1.0 / 12};
  static constexpr std::array<double, 3> w6{3.0 / 4, -3.0 / 20, 1.0 / 60};
  static constexpr std::array<double, 4> w8{4.0 / 5, -1.0 / 5, 4.0 / 105, -1.0 / 280};
  switch (order) {
    case 2: return w2;
    case 4: return w4;
    case 6: return w6;
    case 8: return w8;
    default: throw std::invalid_argument("central_first_weights: order must be 2, 4, 6 or 8");
  }
}

// Central second-derivative weights: center weight first, then offsets 1..order/2.
inline std::span<const double> central_second_weights(int order) {
  static constexpr std::array<double, 2> w2{-2.0, 1.0};
  static constexpr std::array<double, 3> w4{-5.0 / 2, 4.0 / 3, -1.0 / 12};
  static constexpr std::array<double, 4> w6{-49.0 / 18, 3.0 / 2, -3.0 / 20, 1.0 / 90};
  static constexpr std::array<double, 5> w8{-205.0 / 72, 8.0 / 5, -1.0 / 5, 8.0 / 315,
                                            -1.0 / 560};
  switch (order) {
    case 2: return w2;
    case 4: return w4;
    case 6: return w6;
    case 8: return w8;
    default: throw std::invalid_argument("central_second_weights: order must be 2, 4, 6 or 8");
  }
}

template <class F>
auto central_derivative(F&& f, double x, double h, int order = 8) {
  const auto w = central_first_weights(order);
  decltype(f(x)) sum{};
  for (std::size_t j = 0; j < w.size(); ++j) {
    const double off = static_cast<double>(j + 1) * h;
    sum += w[j] * (f(x + off) - f(x - off));
  }
  return sum / h;
}

template <class F>
auto central_second_derivative(F&& f, double x, double h, int order = 8) {
  const auto w = central_second_weights(order);
  auto sum = w[0] * f(x);
  for (std::size_t j = 1; j < w.size(); ++j) {
    const double off = static_cast<double>(j) * h;
    sum += w[j] * (f(x + off) + f(x - off));
  }
  return sum / (h * h);
}

// First derivative of uniformly spaced samples; samples outside the array are zero
// (compactly supported data).
template <class T>
std::vector<T> derivative_samples(std::span<const T> y, double h, int order = 8) {
  const auto w = central_first_weights(order);
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(y.size());
  std::vector<T> out(y.size());
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    T sum{};
    for (std::size_t j = 0; j < w.size(); ++j) {
      const std::ptrdiff_t o = static_cast<std::ptrdiff_t>(j + 1);
      const T plus = i + o < n ? y[i + o] : T{};
      const T minus = i - o >= 0 ? y[i - o] : T{};
      sum += w[j] * (plus - minus);
    }
    out[i] = sum / h;
  }
  return out;
}

}  // namespace qfcs::numeric
