#pragma once

#include <array>
#include <complex>
#include <memory>
#include <optional>
#include <span>
#include <variant>
#include <vector>

namespace qfcs::wick {

using cd = std::complex<double>;

inline constexpr std::size_t max_order = 4;

// Nodes with quadrature weights; kernels pair as sum_i w_i k_i phi_i per index.
struct FunctionalGrid {
  std::vector<double> x;
  std::vector<double> w;

  static std::shared_ptr<const FunctionalGrid> uniform(double lo, double hi, std::size_t n);
  std::size_t size() const { return x.size(); }
};

// Full tensor, index (i_1, ..., i_n) at sum i_k N^(n-k).
struct DenseKernel {
  std::vector<cd> data;
};

// rho(x_1) delta(x_1 - x_2) ... delta(x_1 - x_n).
struct DiagonalKernel {
  std::vector<cd> density;
};

using KernelData = std::variant<DenseKernel, DiagonalKernel>;

// F(phi) = sum_n (1/n!) <F_n, phi^n> with n <= max_order.
class Functional {
 public:
  using Grid = std::shared_ptr<const FunctionalGrid>;

  explicit Functional(Grid grid);

  static Functional constant(Grid grid, cd c);
  // phi(f) = sum_i w_i f_i phi_i
  static Functional linear(Grid grid, std::span<const cd> f);
  // (1/2) <rho, phi^2> as a diagonal kernel of order 2
  static Functional wick_square(Grid grid, std::span<const cd> rho);

  const Grid& grid() const { return grid_; }
  bool has(std::size_t n) const { return kernels_[n].has_value(); }
  const KernelData& kernel(std::size_t n) const;
  bool is_diagonal(std::size_t n) const;
  std::vector<cd> dense(std::size_t n) const;  // materialized kernel (zero tensor when absent)

  void set(std::size_t n, KernelData k);
  void add_dense(std::size_t n, std::span<const cd> tensor);

  cd evaluate(std::span<const cd> phi) const;
  // max deviation of dense kernels from total symmetry
  double symmetry_defect() const;
  // max |F_n - G_n| over all orders
  double distance(const Functional& other) const;

  Functional operator+(const Functional& o) const;
  Functional operator-(const Functional& o) const;
  Functional operator*(cd s) const;

 private:
  Grid grid_;
  std::array<std::optional<KernelData>, max_order + 1> kernels_;
};

std::size_t tensor_size(std::size_t n, std::size_t order);
// Average over all permutations of the tensor indices.
std::vector<cd> symmetrize(std::span<const cd> t, std::size_t n, std::size_t order);

}  // namespace qfcs::wick
