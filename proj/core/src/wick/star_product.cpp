#include <array>
#include "qfcs/wick/star_product.hpp"

#include <cmath>

#include "qfcs/error.hpp"
#include "qfcs/numeric/finite_difference.hpp"

namespace qfcs::wick {

namespace {

constexpr cd I{0.0, 1.0};

double factorial(std::size_t n) {
  double f = 1;
  for (std::size_t k = 2; k <= n; ++k) f *= static_cast<double>(k);
  return f;
}

// out[..., j, ...] = sum_i t[..., i, ...] m[i * N + j] on the given axis.
std::vector<cd> apply_on_axis(const std::vector<cd>& t, std::size_t N, std::size_t rank, std::size_t axis,
                              const std::vector<cd>& m) {
  const std::size_t inner = tensor_size(N, rank - axis - 1);
  const std::size_t outer = tensor_size(N, axis);
  std::vector<cd> out(t.size(), 0.0);
  for (std::size_t o = 0; o < outer; ++o)
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) {
        const cd mij = m[i * N + j];
        if (mij == 0.0) continue;
        const cd* src = &t[(o * N + i) * inner];
        cd* dst = &out[(o * N + j) * inner];
        for (std::size_t q = 0; q < inner; ++q) dst[q] += src[q] * mij;
      }
  return out;
}

}  // namespace

std::string to_string(KernelRole r) {
  switch (r) {
    case KernelRole::causal: return "causal";
    case KernelRole::hadamard: return "hadamard";
    case KernelRole::boundaryVacuum: return "boundaryVacuum";
    case KernelRole::boundaryCommutator: return "boundaryCommutator";
  }
  return "unknown";
}

ProductKernel ProductKernel::sample(KernelRole role, Functional::Grid grid, const std::function<cd(double, double)>& p) {
  const std::size_t N = grid->size();
  ProductKernel out{role, grid, std::vector<cd>(N * N)};
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) out.values[i * N + j] = p(grid->x[i], grid->x[j]);
  return out;
}

ProductKernel ProductKernel::causal(Functional::Grid grid, const std::function<double(double, double)>& g) {
  return sample(KernelRole::causal, std::move(grid), [&g](double x, double y) { return 0.5 * I * g(x, y); });
}

ProductKernel ProductKernel::hadamard(Functional::Grid grid, const std::function<double(double, double)>& h,
                                      const std::function<double(double, double)>& g) {
  return sample(KernelRole::hadamard, std::move(grid),
                [&](double x, double y) { return cd(h(x, y), 0.0) + 0.5 * I * g(x, y); });
}

cd ProductKernel::smear(std::span<const cd> f, std::span<const cd> g) const {
  const std::size_t N = grid->size();
  if (f.size() != N || g.size() != N) throw UsageError("ProductKernel::smear: size mismatch");
  cd s = 0;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) s += grid->w[i] * grid->w[j] * f[i] * values[i * N + j] * g[j];
  return s;
}

double ProductKernel::antisymmetry_defect() const {
  const std::size_t N = grid->size();
  double worst = 0;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) worst = std::max(worst, std::abs(at(i, j) + at(j, i)));
  return worst;
}

double ProductKernel::hermiticity_defect() const {
  const std::size_t N = grid->size();
  double worst = 0;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) worst = std::max(worst, std::abs(at(i, j) - std::conj(at(j, i))));
  return worst;
}

Functional star_product(const Functional& f, const Functional& fp, const ProductKernel& p, std::size_t order) {
  if (f.grid() != fp.grid() || f.grid() != p.grid) throw UsageError("star_product: grids differ");
  const auto& grid = *f.grid();
  const std::size_t N = grid.size();
  std::vector<cd> m(N * N);
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) m[i * N + j] = grid.w[i] * p.values[i * N + j] * grid.w[j];

  Functional out(f.grid());
  for (std::size_t a = 0; a <= max_order; ++a) {
    if (!f.has(a)) continue;
    for (std::size_t b = 0; b <= max_order; ++b) {
      if (!fp.has(b)) continue;
      for (std::size_t n = 0; n <= std::min({a, b, order}); ++n) {
        const std::size_t c = a + b - 2 * n;
        if (c > max_order) continue;
        if (n >= 2 && p.role == KernelRole::causal && f.is_diagonal(a) && fp.is_diagonal(b))
          throw DivergenceError("star_product: contraction of diagonal kernels through G^" + std::to_string(n) +
                                " diverges");
        auto left = f.dense(a);
        for (std::size_t k = 0; k < n; ++k) left = apply_on_axis(left, N, a, a - n + k, m);
        const auto right = fp.dense(b);
        const std::size_t rows = tensor_size(N, a - n), mid = tensor_size(N, n), cols = tensor_size(N, b - n);
        std::vector<cd> prod(rows * cols, 0.0);
        for (std::size_t r = 0; r < rows; ++r)
          for (std::size_t q = 0; q < mid; ++q) {
            const cd l = left[r * mid + q];
            if (l == 0.0) continue;
            const cd* src = &right[q * cols];
            cd* dst = &prod[r * cols];
            for (std::size_t s = 0; s < cols; ++s) dst[s] += l * src[s];
          }
        const double weight = factorial(c) / (factorial(n) * factorial(a - n) * factorial(b - n));
        auto sym = symmetrize(prod, N, c);
        for (auto& v : sym) v *= weight;
        out.add_dense(c, sym);
      }
    }
  }
  return out;
}

Functional alpha_deform(const Functional& f, const ProductKernel& d) {
  if (f.grid() != d.grid) throw UsageError("alpha_deform: grids differ");
  const auto& grid = *f.grid();
  const std::size_t N = grid.size();
  std::vector<cd> pair(N * N);
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j)
      pair[i * N + j] = grid.w[i] * grid.w[j] * 0.5 * (d.values[i * N + j] + d.values[j * N + i]);

  Functional out(f.grid());
  for (std::size_t a = 0; a <= max_order; ++a) {
    if (!f.has(a)) continue;
    for (std::size_t n = 0; 2 * n <= a; ++n) {
      const std::size_t c = a - 2 * n;
      if (n == 0) {
        if (f.is_diagonal(a))
          out = out + [&] {
            Functional g(f.grid());
            g.set(a, f.kernel(a));
            return g;
          }();
        else
          out.add_dense(a, f.dense(a));
        continue;
      }
      std::vector<cd> vec{1.0};
      for (std::size_t k = 0; k < n; ++k) {
        std::vector<cd> next(vec.size() * pair.size());
        for (std::size_t x = 0; x < vec.size(); ++x)
          for (std::size_t y = 0; y < pair.size(); ++y) next[x * pair.size() + y] = vec[x] * pair[y];
        vec = std::move(next);
      }
      const auto t = f.dense(a);
      const std::size_t rows = tensor_size(N, c), cols = vec.size();
      std::vector<cd> res(rows, 0.0);
      for (std::size_t r = 0; r < rows; ++r) {
        cd s = 0;
        for (std::size_t q = 0; q < cols; ++q) s += t[r * cols + q] * vec[q];
        res[r] = s / (factorial(n) * std::ldexp(1.0, static_cast<int>(n)));
      }
      out.add_dense(c, res);
    }
  }
  return out;
}

ProductKernel boundary_commutator_kernel(Functional::Grid grid) {
  const std::size_t N = grid->size();
  if (N < 16) throw DomainError("boundary_commutator_kernel: need at least 16 nodes");
  const double h = grid->x[1] - grid->x[0];
  for (std::size_t i = 1; i < N; ++i)
    if (std::abs(grid->x[i] - grid->x[i - 1] - h) > 1e-9 * h)
      throw DomainError("boundary_commutator_kernel: grid must be uniform");
  const auto wts = numeric::central_first_weights(8);
  // D[i][j]: derivative at i from samples j (zero outside the grid)
  std::vector<double> dm(N * N, 0.0);
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t k = 1; k <= wts.size(); ++k) {
      if (i + k < N) dm[i * N + i + k] += wts[k - 1] / h;
      if (i >= k) dm[i * N + i - k] -= wts[k - 1] / h;
    }
  // Gregory end weights exact through degree 7; the node at distance 0 cancels
  static constexpr std::array<double, 7> greg{5537111.0 / 3628800, 103613.0 / 403200, 261115.0 / 145152,
                                              298951.0 / 725760,   515677.0 / 403200, 3349879.0 / 3628800,
                                              3662753.0 / 3628800};
  auto gregory = [](std::size_t d) { return d <= greg.size() ? greg[d - 1] : 1.0; };
  std::vector<double> sd(N * N, 0.0);  // S D
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) {
      if (i == j) continue;
      const double s = (i > j ? 1.0 : -1.0) * gregory(i > j ? i - j : j - i);
      for (std::size_t q = 0; q < N; ++q) sd[i * N + q] += s * dm[j * N + q];
    }
  ProductKernel out{KernelRole::boundaryCommutator, grid, std::vector<cd>(N * N, 0.0)};
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t q = 0; q < N; ++q) {
      double s = 0;
      for (std::size_t j = 0; j < N; ++j) s += dm[j * N + i] * sd[j * N + q];
      out.values[i * N + q] = -s;
    }
  return out;
}

}  // namespace qfcs::wick
