#include "qfcs/wick/functional.hpp"

#include <algorithm>
#include <numeric>

#include "qfcs/error.hpp"

namespace qfcs::wick {

std::shared_ptr<const FunctionalGrid> FunctionalGrid::uniform(double lo, double hi, std::size_t n) {
  if (n < 2 || !(hi > lo)) throw DomainError("FunctionalGrid: need n >= 2 and hi > lo");
  auto g = std::make_shared<FunctionalGrid>();
  const double h = (hi - lo) / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    g->x.push_back(lo + h * static_cast<double>(i));
    g->w.push_back(i == 0 || i + 1 == n ? 0.5 * h : h);
  }
  return g;
}

std::size_t tensor_size(std::size_t n, std::size_t order) {
  std::size_t s = 1;
  for (std::size_t k = 0; k < order; ++k) s *= n;
  return s;
}

std::vector<cd> symmetrize(std::span<const cd> t, std::size_t n, std::size_t order) {
  if (order < 2) return {t.begin(), t.end()};
  std::vector<std::size_t> perm(order);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<cd> out(t.size(), 0.0);
  std::vector<std::size_t> idx(order), src(order);
  std::size_t count = 0;
  do {
    ++count;
    for (std::size_t flat = 0; flat < t.size(); ++flat) {
      std::size_t rem = flat;
      for (std::size_t k = order; k-- > 0;) {
        idx[k] = rem % n;
        rem /= n;
      }
      std::size_t s = 0;
      for (std::size_t k = 0; k < order; ++k) s = s * n + idx[perm[k]];
      out[flat] += t[s];
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  for (auto& v : out) v /= static_cast<double>(count);
  return out;
}

Functional::Functional(Grid grid) : grid_(std::move(grid)) {
  if (!grid_) throw UsageError("Functional: null grid");
}

Functional Functional::constant(Grid grid, cd c) {
  Functional f(std::move(grid));
  f.set(0, DenseKernel{{c}});
  return f;
}

Functional Functional::linear(Grid grid, std::span<const cd> values) {
  if (values.size() != grid->size()) throw UsageError("Functional::linear: size mismatch");
  Functional f(std::move(grid));
  f.set(1, DenseKernel{{values.begin(), values.end()}});
  return f;
}

Functional Functional::wick_square(Grid grid, std::span<const cd> rho) {
  if (rho.size() != grid->size()) throw UsageError("Functional::wick_square: size mismatch");
  Functional f(std::move(grid));
  f.set(2, DiagonalKernel{{rho.begin(), rho.end()}});
  return f;
}

const KernelData& Functional::kernel(std::size_t n) const {
  if (n > max_order || !kernels_[n]) throw UsageError("Functional: kernel of order " + std::to_string(n) + " absent");
  return *kernels_[n];
}

bool Functional::is_diagonal(std::size_t n) const {
  return n <= max_order && kernels_[n] && std::holds_alternative<DiagonalKernel>(*kernels_[n]);
}

std::vector<cd> Functional::dense(std::size_t n) const {
  const std::size_t N = grid_->size();
  std::vector<cd> out(tensor_size(N, n), 0.0);
  if (n > max_order || !kernels_[n]) return out;
  if (const auto* d = std::get_if<DenseKernel>(&*kernels_[n])) return d->data;
  const auto& rho = std::get<DiagonalKernel>(*kernels_[n]).density;
  // discrete delta: 1 / w_i on the diagonal
  for (std::size_t i = 0; i < N; ++i) {
    std::size_t flat = 0;
    for (std::size_t k = 0; k < n; ++k) flat = flat * N + i;
    cd v = rho[i];
    for (std::size_t k = 1; k < n; ++k) v /= grid_->w[i];
    out[flat] = v;
  }
  return out;
}

void Functional::set(std::size_t n, KernelData k) {
  if (n > max_order) throw UsageError("Functional: order above the truncation");
  const std::size_t N = grid_->size();
  if (const auto* d = std::get_if<DenseKernel>(&k); d && d->data.size() != tensor_size(N, n))
    throw UsageError("Functional: dense kernel size mismatch");
  if (const auto* d = std::get_if<DiagonalKernel>(&k); d && (d->density.size() != N || n < 1))
    throw UsageError("Functional: diagonal kernel size mismatch");
  kernels_[n] = std::move(k);
}

void Functional::add_dense(std::size_t n, std::span<const cd> tensor) {
  auto cur = dense(n);
  if (tensor.size() != cur.size()) throw UsageError("Functional: dense kernel size mismatch");
  for (std::size_t i = 0; i < cur.size(); ++i) cur[i] += tensor[i];
  kernels_[n] = DenseKernel{std::move(cur)};
}

cd Functional::evaluate(std::span<const cd> phi) const {
  const std::size_t N = grid_->size();
  if (phi.size() != N) throw UsageError("Functional::evaluate: field size mismatch");
  cd total = 0;
  double factorial = 1;
  for (std::size_t n = 0; n <= max_order; ++n) {
    if (n > 0) factorial *= static_cast<double>(n);
    if (!kernels_[n]) continue;
    if (const auto* d = std::get_if<DiagonalKernel>(&*kernels_[n])) {
      cd s = 0;
      for (std::size_t i = 0; i < N; ++i) s += grid_->w[i] * d->density[i] * std::pow(phi[i], static_cast<int>(n));
      total += s / factorial;
      continue;
    }
    const auto& t = std::get<DenseKernel>(*kernels_[n]).data;
    cd s = 0;
    for (std::size_t flat = 0; flat < t.size(); ++flat) {
      std::size_t rem = flat;
      cd term = t[flat];
      for (std::size_t k = 0; k < n; ++k) {
        const std::size_t i = rem % N;
        rem /= N;
        term *= grid_->w[i] * phi[i];
      }
      s += term;
    }
    total += s / factorial;
  }
  return total;
}

double Functional::symmetry_defect() const {
  double worst = 0;
  for (std::size_t n = 2; n <= max_order; ++n) {
    if (!kernels_[n] || is_diagonal(n)) continue;
    const auto& t = std::get<DenseKernel>(*kernels_[n]).data;
    const auto s = symmetrize(t, grid_->size(), n);
    for (std::size_t i = 0; i < t.size(); ++i) worst = std::max(worst, std::abs(t[i] - s[i]));
  }
  return worst;
}

double Functional::distance(const Functional& other) const {
  double worst = 0;
  for (std::size_t n = 0; n <= max_order; ++n) {
    if (!has(n) && !other.has(n)) continue;
    const auto a = dense(n), b = other.dense(n);
    for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  }
  return worst;
}

Functional Functional::operator+(const Functional& o) const {
  if (grid_ != o.grid_) throw UsageError("Functional: grids differ");
  Functional out(grid_);
  for (std::size_t n = 0; n <= max_order; ++n) {
    if (!has(n) && !o.has(n)) continue;
    if (!o.has(n)) {
      out.kernels_[n] = kernels_[n];
    } else if (!has(n)) {
      out.kernels_[n] = o.kernels_[n];
    } else if (is_diagonal(n) && o.is_diagonal(n)) {
      auto rho = std::get<DiagonalKernel>(*kernels_[n]).density;
      const auto& r2 = std::get<DiagonalKernel>(*o.kernels_[n]).density;
      for (std::size_t i = 0; i < rho.size(); ++i) rho[i] += r2[i];
      out.kernels_[n] = DiagonalKernel{std::move(rho)};
    } else {
      auto a = dense(n);
      const auto b = o.dense(n);
      for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
      out.kernels_[n] = DenseKernel{std::move(a)};
    }
  }
  return out;
}

Functional Functional::operator*(cd s) const {
  Functional out = *this;
  for (auto& k : out.kernels_) {
    if (!k) continue;
    std::visit(
        [s](auto& v) {
          if constexpr (std::is_same_v<std::decay_t<decltype(v)>, DenseKernel>)
            for (auto& x : v.data) x *= s;
          else
            for (auto& x : v.density) x *= s;
        },
        *k);
  }
  return out;
}

Functional Functional::operator-(const Functional& o) const { return *this + o * cd(-1.0); }

}  // namespace qfcs::wick
