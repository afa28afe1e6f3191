#pragma once

#include <complex>
#include <cstddef>
#include <memory>
#include <span>
#include <vector>

namespace qfcs::numeric {

enum class FftSign { forward = -1, backward = +1 };

// Unnormalized complex DFT  Y_m = sum_n X_n exp(sign * 2 pi i m n / N), backed by an
// FFTW plan owned for the lifetime of the object.
class Fft1d {
 public:
  Fft1d(std::size_t n, FftSign sign);
  ~Fft1d();
  Fft1d(Fft1d&&) noexcept;
  Fft1d& operator=(Fft1d&&) noexcept;
  Fft1d(const Fft1d&) = delete;
  Fft1d& operator=(const Fft1d&) = delete;

  std::size_t size() const { return n_; }
  std::vector<std::complex<double>> operator()(std::span<const std::complex<double>> in) const;

 private:
  struct Plan;
  std::size_t n_;
  std::unique_ptr<Plan> plan_;
};

// Row-major 2D transform of an n0 x n1 array.
class Fft2d {
 public:
  Fft2d(std::size_t n0, std::size_t n1, FftSign sign);
  ~Fft2d();
  Fft2d(Fft2d&&) noexcept;
  Fft2d& operator=(Fft2d&&) noexcept;
  Fft2d(const Fft2d&) = delete;
  Fft2d& operator=(const Fft2d&) = delete;

  std::vector<std::complex<double>> operator()(std::span<const std::complex<double>> in) const;

 private:
  struct Plan;
  std::size_t n0_, n1_;
  std::unique_ptr<Plan> plan_;
};

// Signed DFT frequency index of bin m for length n: m for m < (n+1)/2, else m - n.
inline long signed_bin(std::size_t m, std::size_t n) {
  const long mm = static_cast<long>(m);
  const long nn = static_cast<long>(n);
  return mm < (nn + 1) / 2 ? mm : mm - nn;
}

}  // namespace qfcs::numeric
