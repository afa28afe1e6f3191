#pragma once

#include <complex>
#include <vector>

namespace qfcs::modes {

using cd = std::complex<double>;

struct ModeValue {
  cd chi;
  cd dchi;
};

struct ModeFunction {
  double k = 0.0;
  std::vector<double> tau;
  std::vector<cd> chi;
  std::vector<cd> dchi;
  double tau0 = 0.0;  // initialization time
  // Per-order sup norms of the Duhamel corrections (empty for direct solves).
  std::vector<double> order_norms;
};

// W = chi' conj(chi) - chi conj(chi'); -i for normalized modes.
std::vector<cd> wronskian(const ModeFunction& mode);
double max_wronskian_drift(const ModeFunction& mode);

}  // namespace qfcs::modes
