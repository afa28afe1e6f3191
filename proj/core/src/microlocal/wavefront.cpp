#include "qfcs/microlocal/wavefront.hpp"

#include <cmath>
#include <numbers>

#include "qfcs/error.hpp"
#include "qfcs/numeric/fft.hpp"
#include "qfcs/numeric/parallel.hpp"

namespace qfcs::microlocal {

SampledKernel2D SampledKernel2D::sample(double u0, double du, std::size_t n, double eps,
                                        const std::function<cd(double, double)>& k) {
  if (!(du > 0) || n < 8) throw DomainError("SampledKernel2D: need du > 0 and at least 8 samples");
  SampledKernel2D out{u0, du, n, eps, std::vector<cd>(n * n)};
  numeric::parallel_for(n, [&](std::size_t i) {
    for (std::size_t j = 0; j < n; ++j) out.values[i * n + j] = k(out.u(i), out.u(j));
  });
  return out;
}

SampledKernel2D SampledKernel2D::conjugate() const {
  auto out = *this;
  for (auto& v : out.values) v = std::conj(v);
  return out;
}

double WindowedSpectrum::at(long m, long mp) const {
  const long w = static_cast<long>(size);
  const auto i = static_cast<std::size_t>((m % w + w) % w), j = static_cast<std::size_t>((mp % w + w) % w);
  return energy[i * size + j];
}

double WindowedSpectrum::total() const {
  double s = 0;
  for (double e : energy) s += e;
  return s;
}

WindowedSpectrum windowed_spectrum(const SampledKernel2D& k, WindowCenter center, std::size_t width) {
  if (width < 8) throw DomainError("windowed_spectrum: window narrower than 8 samples");
  const double ci = (center.u - k.u0) / k.du, cj = (center.up - k.u0) / k.du;
  const double half = 0.5 * static_cast<double>(width);
  const double lo_i = std::round(ci - half), lo_j = std::round(cj - half);
  if (lo_i < 0 || lo_j < 0 || lo_i + static_cast<double>(width) > static_cast<double>(k.n) ||
      lo_j + static_cast<double>(width) > static_cast<double>(k.n))
    throw DomainError("windowed_spectrum: window leaves the sampled grid");
  WindowedSpectrum out;
  out.size = width;
  out.i0 = static_cast<std::size_t>(lo_i);
  out.j0 = static_cast<std::size_t>(lo_j);
  std::vector<double> w(width);
  for (std::size_t a = 0; a < width; ++a)
    w[a] = 0.5 * (1 - std::cos(2 * std::numbers::pi * static_cast<double>(a) / static_cast<double>(width)));
  std::vector<cd> patch(width * width);
  for (std::size_t a = 0; a < width; ++a)
    for (std::size_t b = 0; b < width; ++b) {
      const cd v = w[a] * w[b] * k.at(out.i0 + a, out.j0 + b);
      patch[a * width + b] = v;
      out.sample_energy += std::norm(v);
    }
  const numeric::Fft2d fft(width, width, numeric::FftSign::backward);
  const auto spec = fft(patch);
  const double scale = 1.0 / static_cast<double>(width * width);  // Parseval normalization
  out.energy.resize(spec.size());
  for (std::size_t q = 0; q < spec.size(); ++q) out.energy[q] = std::norm(spec[q]) * scale;
  return out;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::regular: return "regular";
  }
  return "unknown";
}

WFReport orientation_report(const WindowedSpectrum& s, WindowCenter center, const OrientationOptions& opt) {
  WFReport rep;
  rep.center = center;
  double oriented = 0, total = 0;
  for (std::size_t a = 0; a < s.size; ++a) {
    const long m = numeric::signed_bin(a, s.size);
    for (std::size_t b = 0; b < s.size; ++b) {
      const long mp = numeric::signed_bin(b, s.size);
      const double e = s.energy[a * s.size + b];
      total += e;
      // zero bins are assigned to the + side
      (m >= 0 ? (mp >= 0 ? rep.mass_pp : rep.mass_pm) : (mp >= 0 ? rep.mass_mp : rep.mass_mm)) += e;
      if (std::abs(m) <= opt.smooth_bins && std::abs(mp) <= opt.smooth_bins) continue;
      rep.singular_mass += e;
      if (m > 0 && (mp < 0 || std::abs(m + mp) <= opt.band_bins)) oriented += e;
    }
  }
  if (rep.singular_mass <= opt.regular_fraction * total) {
    rep.orientation_score = 1.0;
    rep.verdict = Verdict::regular;
    return rep;
  }
  rep.orientation_score = oriented / rep.singular_mass;
  rep.verdict = rep.orientation_score >= opt.pass_score ? Verdict::pass : Verdict::fail;
  return rep;
}

std::vector<WFReport> msc_orientation(const SampledKernel2D& k, const std::vector<WindowCenter>& centers,
                                      const OrientationOptions& opt) {
  const std::size_t width = opt.width ? opt.width : k.n / 4;
  std::vector<WFReport> out(centers.size());
  numeric::parallel_for(centers.size(), [&](std::size_t c) {
    out[c] = orientation_report(windowed_spectrum(k, centers[c], width), centers[c], opt);
  });
  return out;
}

}  // namespace qfcs::microlocal
