#include "qfcs/bulk/quasifree.hpp"

namespace qfcs::bulk {

namespace {

void enumerate(std::vector<std::size_t>& free, Pairing& current, std::vector<Pairing>& out) {
  if (free.empty()) {
    out.push_back(current);
    return;
  }
  const std::size_t first = free.front();
  for (std::size_t k = 1; k < free.size(); ++k) {
    const std::size_t second = free[k];
    std::vector<std::size_t> rest;
    rest.reserve(free.size() - 2);
    for (std::size_t m = 1; m < free.size(); ++m)
      if (m != k) rest.push_back(free[m]);
    current.emplace_back(first, second);
    enumerate(rest, current, out);
    current.pop_back();
  }
}

std::complex<double> sum_pairings(std::vector<std::size_t>& free,
                                  const std::function<std::complex<double>(std::size_t, std::size_t)>& w2) {
  if (free.empty()) return 1.0;
  const std::size_t first = free.front();
  std::complex<double> total = 0.0;
  for (std::size_t k = 1; k < free.size(); ++k) {
    std::vector<std::size_t> rest;
    rest.reserve(free.size() - 2);
    for (std::size_t m = 1; m < free.size(); ++m)
      if (m != k) rest.push_back(free[m]);
    total += w2(first, free[k]) * sum_pairings(rest, w2);
  }
  return total;
}

}  // namespace

std::vector<Pairing> ordered_pairings(std::size_t n) {
  std::vector<Pairing> out;
  if (n % 2 == 1) return out;
  std::vector<std::size_t> free(n);
  for (std::size_t i = 0; i < n; ++i) free[i] = i;
  Pairing current;
  enumerate(free, current, out);
  return out;
}

std::size_t pairing_count(std::size_t n) {
  if (n % 2 == 1) return 0;
  std::size_t c = 1;
  for (std::size_t k = n; k > 1; k -= 2) c *= k - 1;
  return c;
}

std::complex<double> npoint_quasifree(const std::function<std::complex<double>(std::size_t, std::size_t)>& w2,
                                      std::size_t n) {
  if (n % 2 == 1) return 0.0;
  std::vector<std::size_t> free(n);
  for (std::size_t i = 0; i < n; ++i) free[i] = i;
  return sum_pairings(free, w2);
}

}  // namespace qfcs::bulk
