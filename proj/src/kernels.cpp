#include "homtaylor/kernels.hpp"

#include <array>
#include <cstdint>

#include "homtaylor/combinatorics.hpp"
#include "homtaylor/jet.hpp"
#include "homtaylor/symtensor.hpp"

namespace homtaylor::kernels {

double product_coeff(const JetLayout& layout, std::span<const double> x,
                     std::span<const double> y, std::size_t pos) {
  const auto alpha = layout.exponent(pos);
  const int n = layout.dim();
  std::array<int, kMaxDim> beta{};
  std::array<int, kMaxDim> gamma;
  for (int i = 0; i < n; ++i) {
    gamma[i] = alpha[i];
  }
  const std::span<const int> beta_s(beta.data(), static_cast<std::size_t>(n));
  const std::span<const int> gamma_s(gamma.data(), static_cast<std::size_t>(n));
  double acc = 0.0;
  while (true) {
    const double xv = x[layout.rank(beta_s)];
    if (xv != 0.0) {
      acc += xv * y[layout.rank(gamma_s)];
    }
    // next beta <= alpha in ascending lexicographic order
    int j = n - 1;
    while (j >= 0 && beta[j] == alpha[j]) {
      gamma[j] = alpha[j];
      beta[j] = 0;
      --j;
    }
    if (j < 0) {
      break;
    }
    ++beta[j];
    --gamma[j];
  }
  return acc;
}

void jet_mul_serial(const JetLayout& layout, std::span<const double> x,
                    std::span<const double> y, std::span<double> out) {
  const std::size_t size = layout.size();
  for (std::size_t k = 0; k < size; ++k) {
    out[k] = product_coeff(layout, x, y, k);
  }
}

void jet_mul_parallel(const JetLayout& layout, std::span<const double> x,
                      std::span<const double> y, std::span<double> out) {
  const std::int64_t size = static_cast<std::int64_t>(layout.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t k = 0; k < size; ++k) {
    out[k] = product_coeff(layout, x, y, static_cast<std::size_t>(k));
  }
}

void jet_mul(const JetLayout& layout, std::span<const double> x,
             std::span<const double> y, std::span<double> out) {
  if (layout.size() >= kParallelCutoff) {
    jet_mul_parallel(layout, x, y, out);
  } else {
    jet_mul_serial(layout, x, y, out);
  }
}

double contract_coeff(const TensorLayout& parent, const TensorLayout& child,
                      std::span<const double> t, std::span<const double> v,
                      std::size_t pos) {
  const auto mu = child.multiset(pos);
  const int n = parent.dim();
  double acc = 0.0;
  for (int i = 0; i < n; ++i) {
    acc += t[TensorLayout::rank_with_insert(parent, mu, i)] * v[i];
  }
  return acc;
}

void contract_serial(const TensorLayout& parent, const TensorLayout& child,
                     std::span<const double> t, std::span<const double> v,
                     std::span<double> out) {
  const std::size_t size = child.size();
  for (std::size_t c = 0; c < size; ++c) {
    out[c] = contract_coeff(parent, child, t, v, c);
  }
}

void contract_parallel(const TensorLayout& parent, const TensorLayout& child,
                       std::span<const double> t, std::span<const double> v,
                       std::span<double> out) {
  const std::int64_t size = static_cast<std::int64_t>(child.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t c = 0; c < size; ++c) {
    out[c] = contract_coeff(parent, child, t, v, static_cast<std::size_t>(c));
  }
}

void contract(const TensorLayout& parent, const TensorLayout& child,
              std::span<const double> t, std::span<const double> v,
              std::span<double> out) {
  if (child.size() >= kParallelCutoff) {
    contract_parallel(parent, child, t, v, out);
  } else {
    contract_serial(parent, child, t, v, out);
  }
}

}  // namespace homtaylor::kernels
