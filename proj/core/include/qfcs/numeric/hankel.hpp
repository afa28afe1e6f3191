#pragma once

#include <complex>

namespace qfcs::numeric {

struct HankelValue {
  std::complex<double> value;
  std::complex<double> derivative;
};

// Hankel function of the first kind H^(1)_nu(x) for complex order and real x > 0.
// Below x = 20: J + iY for real order, otherwise the Schlafli contour integral summed by
// fixed Gauss rules. Above, the Hankel asymptotic series truncated at its smallest term.
std::complex<double> hankel1(std::complex<double> nu, double x);

// Value and x-derivative, H' = H_{nu-1} - (nu/x) H.
HankelValue hankel1_with_derivative(std::complex<double> nu, double x);

}  // namespace qfcs::numeric
