#pragma once

#include "qfcs/modes/mode_function.hpp"
#include "qfcs/modes/potential.hpp"

namespace qfcs::modes {

// Bunch-Davies mode (sqrt(-pi tau)/2) e^{-i pi nu/2} conj(H^(2)_nu(-k tau)), times the
// constant phase e^{i pi (Re nu + 1/4)} so that nu = 1/2 gives e^{-ik tau}/sqrt(2k).
ModeValue ds_mode(double k, double tau, NuParameter nu);

ModeFunction ds_mode_function(double k, const std::vector<double>& tau, NuParameter nu);

}  // namespace qfcs::modes
