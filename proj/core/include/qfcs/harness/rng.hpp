#pragma once

#include <cstdint>

namespace qfcs::harness {

// Counter-based generator: draw n is a pure function of (seed, n), so streams can be
// split and replayed. The number of consumed draws is tracked for provenance.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0) : seed_(seed), stream_(stream) {}

  std::uint64_t next_u64() { return draw(counter_++); }
  // Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  double normal();

  // Independent generator for a named sub-task.
  CounterRng split(std::uint64_t stream) const { return CounterRng(seed_, mix(stream_ ^ mix(stream))); }

  std::uint64_t seed() const { return seed_; }
  std::uint64_t consumed() const { return counter_; }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  std::uint64_t draw(std::uint64_t n) const { return mix(mix(seed_ ^ mix(stream_)) + n); }

  std::uint64_t seed_;
  std::uint64_t stream_;
  std::uint64_t counter_ = 0;
};

}  // namespace qfcs::harness
