#include "qfcs/numeric/fft.hpp"

#include <fftw3.h>

#include <algorithm>
#include <mutex>

#include "qfcs/error.hpp"

namespace qfcs::numeric {

namespace {

// FFTW's planner is not re-entrant; execution of distinct plans is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

struct Buffer {
  fftw_complex* data;
  explicit Buffer(std::size_t n) : data(fftw_alloc_complex(n)) {
    if (!data) throw NumericError("fftw: allocation failed");
  }
  ~Buffer() { fftw_free(data); }
  Buffer(const Buffer&) = delete;
  Buffer& operator=(const Buffer&) = delete;
};

}  // namespace

struct Fft1d::Plan {
  Buffer in;
  Buffer out;
  fftw_plan plan;
  mutable std::mutex run;
  Plan(std::size_t n, int sign) : in(n), out(n) {
    std::lock_guard lock(planner_mutex());
    plan = fftw_plan_dft_1d(static_cast<int>(n), in.data, out.data, sign, FFTW_ESTIMATE);
    if (!plan) throw NumericError("fftw: 1D planning failed");
  }
  ~Plan() {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(plan);
  }
};

Fft1d::Fft1d(std::size_t n, FftSign sign)
    : n_(n), plan_(std::make_unique<Plan>(n, static_cast<int>(sign))) {
  if (n == 0) throw DomainError("Fft1d: empty transform");
}
Fft1d::~Fft1d() = default;
Fft1d::Fft1d(Fft1d&&) noexcept = default;
Fft1d& Fft1d::operator=(Fft1d&&) noexcept = default;

std::vector<std::complex<double>> Fft1d::operator()(
    std::span<const std::complex<double>> in) const {
  if (in.size() != n_) throw DomainError("Fft1d: length mismatch");
  std::vector<std::complex<double>> out(n_);
  std::lock_guard lock(plan_->run);
  std::copy(in.begin(), in.end(), reinterpret_cast<std::complex<double>*>(plan_->in.data));
  fftw_execute(plan_->plan);
  const auto* src = reinterpret_cast<const std::complex<double>*>(plan_->out.data);
  std::copy(src, src + n_, out.begin());
  return out;
}

struct Fft2d::Plan {
  Buffer in;
  Buffer out;
  fftw_plan plan;
  mutable std::mutex run;
  Plan(std::size_t n0, std::size_t n1, int sign) : in(n0 * n1), out(n0 * n1) {
    std::lock_guard lock(planner_mutex());
    plan = fftw_plan_dft_2d(static_cast<int>(n0), static_cast<int>(n1), in.data, out.data, sign,
                            FFTW_ESTIMATE);
    if (!plan) throw NumericError("fftw: 2D planning failed");
  }
  ~Plan() {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(plan);
  }
};

Fft2d::Fft2d(std::size_t n0, std::size_t n1, FftSign sign)
    : n0_(n0), n1_(n1), plan_(std::make_unique<Plan>(n0, n1, static_cast<int>(sign))) {}
Fft2d::~Fft2d() = default;
Fft2d::Fft2d(Fft2d&&) noexcept = default;
Fft2d& Fft2d::operator=(Fft2d&&) noexcept = default;

std::vector<std::complex<double>> Fft2d::operator()(
    std::span<const std::complex<double>> in) const {
  const std::size_t n = n0_ * n1_;
  if (in.size() != n) throw DomainError("Fft2d: size mismatch");
  std::vector<std::complex<double>> out(n);
  std::lock_guard lock(plan_->run);
  std::copy(in.begin(), in.end(), reinterpret_cast<std::complex<double>*>(plan_->in.data));
  fftw_execute(plan_->plan);
  const auto* src = reinterpret_cast<const std::complex<double>*>(plan_->out.data);
  std::copy(src, src + n, out.begin());
  return out;
}

}  // namespace qfcs::numeric
