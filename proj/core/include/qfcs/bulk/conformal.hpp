#pragma once

#include <functional>

#include "qfcs/geometry/cosmology.hpp"

namespace qfcs::bulk {

using RadialField = std::function<double(double, double)>;  // (tau, r)

// -d_tau^2 h + Laplacian h for a radial function, by 8th-order central differences.
double flat_wave_operator(const RadialField& h, double tau, double r, double step = 1e-2);

// (Box_g - R/6) phi on ds^2 = a^2 (-dtau^2 + dx^2), by central differences.
double frw_conformal_operator(const geometry::CosmologyModel& model, const RadialField& phi, double tau, double r,
                              double step = 1e-2);

}  // namespace qfcs::bulk
