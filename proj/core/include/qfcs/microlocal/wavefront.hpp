#pragma once

#include <complex>
#include <functional>
#include <string>
#include <vector>

namespace qfcs::microlocal {

using cd = std::complex<double>;

// K(u_i, u'_j) on the square grid u_i = u0 + i du, row-major in i.
struct SampledKernel2D {
  double u0 = 0.0;
  double du = 1.0;
  std::size_t n = 0;
  double eps = 0.0;
  std::vector<cd> values;

  static SampledKernel2D sample(double u0, double du, std::size_t n, double eps,
                                const std::function<cd(double, double)>& k);
  cd at(std::size_t i, std::size_t j) const { return values[i * n + j]; }
  double u(std::size_t i) const { return u0 + static_cast<double>(i) * du; }
  SampledKernel2D conjugate() const;
};

// |DFT|^2 of the raised-cosine windowed patch, bins (m, m') in signed order.
// Transform sign e^{+i(k u + k' u')}, so 1/(u - u' - i eps)^2 lives at k > 0, k' = -k.
struct WindowedSpectrum {
  std::size_t size = 0;        // window width in samples
  std::size_t i0 = 0, j0 = 0;  // first sample of the window
  std::vector<double> energy;  // row-major over FFT bins
  double sample_energy = 0.0;  // sum |w K|^2 over the window

  double at(long m, long mp) const;
  double total() const;
};

struct WindowCenter {
  double u;
  double up;
};

WindowedSpectrum windowed_spectrum(const SampledKernel2D& k, WindowCenter center, std::size_t width);

enum class Verdict { pass, fail, regular };
std::string to_string(Verdict v);

struct WFReport {
  WindowCenter center;
  double mass_pm = 0, mass_mp = 0, mass_pp = 0, mass_mm = 0;  // quadrants (+,-), (-,+), (+,+), (-,-)
  double singular_mass = 0;  // outside the low-frequency box
  double orientation_score = 1;
  Verdict verdict = Verdict::regular;
};

struct OrientationOptions {
  std::size_t width = 0;     // 0: a quarter of the grid
  long smooth_bins = 8;      // low-frequency box |m|, |m'| <= smooth_bins
  long band_bins = 2;        // |m + m'| <= band_bins counts as on the cone line
  double regular_fraction = 1e-6;
  double pass_score = 0.99;
};

WFReport orientation_report(const WindowedSpectrum& s, WindowCenter center, const OrientationOptions& opt = {});
std::vector<WFReport> msc_orientation(const SampledKernel2D& k, const std::vector<WindowCenter>& centers,
                                      const OrientationOptions& opt = {});

}  // namespace qfcs::microlocal
