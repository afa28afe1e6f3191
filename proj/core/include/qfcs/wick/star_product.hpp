#pragma once

#include <functional>
#include <string>

#include "qfcs/wick/functional.hpp"

namespace qfcs::wick {

enum class KernelRole { causal, hadamard, boundaryVacuum, boundaryCommutator };
std::string to_string(KernelRole r);

// Bi-kernel P(x_i, x_j) on a functional grid, row-major.
struct ProductKernel {
  KernelRole role;
  Functional::Grid grid;
  std::vector<cd> values;

  static ProductKernel sample(KernelRole role, Functional::Grid grid, const std::function<cd(double, double)>& p);
  // iG/2 from a real antisymmetric causal propagator G.
  static ProductKernel causal(Functional::Grid grid, const std::function<double(double, double)>& g);
  // h + iG/2 with h the real symmetric part of the Hadamard bi-distribution.
  static ProductKernel hadamard(Functional::Grid grid, const std::function<double(double, double)>& h,
                                const std::function<double(double, double)>& g);

  cd at(std::size_t i, std::size_t j) const { return values[i * grid->size() + j]; }
  cd smear(std::span<const cd> f, std::span<const cd> g) const;
  double antisymmetry_defect() const;  // max |P_ij + P_ji|
  double hermiticity_defect() const;   // max |P_ij - conj P_ji|
};

// sum_n (1/n!) <F^(n), P^n F'^(n)> for n <= order, kernels above max_order dropped.
// Throws DivergenceError for n >= 2 contractions of two diagonal kernels through a causal
// kernel (the square of the causal propagator on the diagonal has no meaning).
Functional star_product(const Functional& f, const Functional& fp, const ProductKernel& p,
                        std::size_t order = max_order);

// exp((1/2) <D, delta^2>) F with the symmetric part of D.
Functional alpha_deform(const Functional& f, const ProductKernel& d);

// -d_V d_V' sign(V - V') on a uniform grid: B = -D^T S D with D the 8th-order difference
// matrix and S the sign matrix carrying Gregory end weights next to the diagonal.
ProductKernel boundary_commutator_kernel(Functional::Grid grid);

}  // namespace qfcs::wick
