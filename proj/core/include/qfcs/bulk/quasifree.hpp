#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <utility>
#include <vector>

namespace qfcs::bulk {

using Pairing = std::vector<std::pair<std::size_t, std::size_t>>;

// Pair partitions of {0..n-1} with i < j inside each pair and pairs ordered by first index.
std::vector<Pairing> ordered_pairings(std::size_t n);
// (n-1)!! for even n, 0 for odd n.
std::size_t pairing_count(std::size_t n);

// Sum over ordered pairings of products of two-point values w2(i, j), i < j.
std::complex<double> npoint_quasifree(const std::function<std::complex<double>(std::size_t, std::size_t)>& w2,
                                      std::size_t n);

template <class TestFunction>
class QuasiFreeState {
 public:
  using TwoPoint = std::function<std::complex<double>(const TestFunction&, const TestFunction&)>;

  explicit QuasiFreeState(TwoPoint w2) : w2_(std::move(w2)) {}

  std::complex<double> two_point(const TestFunction& f, const TestFunction& g) const { return w2_(f, g); }

  std::complex<double> npoint(std::span<const TestFunction> args) const {
    if (args.size() % 2 == 1) return 0.0;
    const std::size_t n = args.size();
    std::vector<std::complex<double>> table(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) table[i * n + j] = w2_(args[i], args[j]);
    return npoint_quasifree([&](std::size_t i, std::size_t j) { return table[i * n + j]; }, n);
  }

 private:
  TwoPoint w2_;
};

}  // namespace qfcs::bulk
