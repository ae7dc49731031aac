#include "homtaylor/symtensor.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>

#include "homtaylor/combinatorics.hpp"
#include "homtaylor/kernels.hpp"

namespace homtaylor {

TensorLayout::TensorLayout(int dim, int order) : dim_(dim), order_(order) {
  if (dim < 1 || dim > kMaxDim) {
    throw std::invalid_argument("TensorLayout: dim must be in [1, " +
                                std::to_string(kMaxDim) + "]");
  }
  if (order < 0 || order > kMaxOrder) {
    throw std::invalid_argument("TensorLayout: order must be in [0, " +
                                std::to_string(kMaxOrder) + "]");
  }
  size_ = static_cast<std::size_t>(binomial_exact(dim + order - 1, order));

  choose_stride_ = dim + order + 1;
  choose_.assign(static_cast<std::size_t>(choose_stride_) * choose_stride_, 0);
  for (int a = 0; a < choose_stride_; ++a) {
    for (int b = 0; b <= a; ++b) {
      choose_[static_cast<std::size_t>(a) * choose_stride_ + b] =
          binomial_exact(a, b);
    }
  }

  // Enumerate non-decreasing tuples in ascending lexicographic order.
  tuples_.reserve(size_ * static_cast<std::size_t>(order_));
  std::vector<std::uint8_t> mu(static_cast<std::size_t>(order_), 0);
  for (std::size_t pos = 0; pos < size_; ++pos) {
    tuples_.insert(tuples_.end(), mu.begin(), mu.end());
    int j = order_ - 1;
    while (j >= 0 && mu[j] == dim_ - 1) {
      --j;
    }
    if (j < 0) {
      break;
    }
    const std::uint8_t v = static_cast<std::uint8_t>(mu[j] + 1);
    for (int i = j; i < order_; ++i) {
      mu[i] = v;
    }
  }
}

std::size_t TensorLayout::rank(std::span<const int> sorted_indices) const {
  std::size_t r = 0;
  int lo = 0;
  const int k = order_;
  for (int j = 0; j < k; ++j) {
    for (int v = lo; v < sorted_indices[j]; ++v) {
      r += static_cast<std::size_t>(choose(dim_ - v + k - j - 2, k - 1 - j));
    }
    lo = sorted_indices[j];
  }
  return r;
}

std::size_t TensorLayout::rank_with_insert(const TensorLayout& parent,
                                           std::span<const std::uint8_t> sorted,
                                           int extra) {
  std::array<int, kMaxOrder> merged;
  const int k = static_cast<int>(sorted.size());
  int pos = 0;
  while (pos < k && sorted[pos] <= extra) {
    merged[pos] = sorted[pos];
    ++pos;
  }
  merged[pos] = extra;
  for (int i = pos; i < k; ++i) {
    merged[i + 1] = sorted[i];
  }
  return parent.rank(std::span<const int>(merged.data(),
                                          static_cast<std::size_t>(k + 1)));
}

std::shared_ptr<const TensorLayout> TensorLayout::get(int dim, int order) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::shared_ptr<const TensorLayout>>
      cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& entry = cache[{dim, order}];
  if (!entry) {
    entry = std::make_shared<const TensorLayout>(dim, order);
  }
  return entry;
}

MultiIndex::MultiIndex(std::vector<int> indices, int dim)
    : indices_(std::move(indices)), dim_(dim) {
  if (dim < 1 || dim > kMaxDim) {
    throw std::invalid_argument("MultiIndex: dim out of range");
  }
  if (static_cast<int>(indices_.size()) > kMaxOrder) {
    throw std::invalid_argument("MultiIndex: order out of range");
  }
  for (int i : indices_) {
    if (i < 0 || i >= dim_) {
      throw std::out_of_range("MultiIndex: index out of range");
    }
  }
  std::sort(indices_.begin(), indices_.end());
}

SymmetricTensor::SymmetricTensor(int dim, int order)
    : layout_(TensorLayout::get(dim, order)), coeffs_(layout_->size(), 0.0) {}

SymmetricTensor::SymmetricTensor(int dim, int order,
                                 std::vector<double> canonical_coeffs)
    : layout_(TensorLayout::get(dim, order)),
      coeffs_(std::move(canonical_coeffs)) {
  if (coeffs_.size() != layout_->size()) {
    throw std::invalid_argument(
        "SymmetricTensor: coefficient count does not match layout");
  }
}

std::size_t SymmetricTensor::checked_rank(std::span<const int> indices) const {
  if (static_cast<int>(indices.size()) != order()) {
    throw std::invalid_argument("SymmetricTensor: wrong index arity");
  }
  std::array<int, kMaxOrder> sorted;
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (indices[i] < 0 || indices[i] >= dim()) {
      throw std::out_of_range("SymmetricTensor: index out of range");
    }
    sorted[i] = indices[i];
  }
  std::sort(sorted.begin(), sorted.begin() + indices.size());
  return layout_->rank(
      std::span<const int>(sorted.data(), indices.size()));
}

double SymmetricTensor::get(std::span<const int> indices) const {
  return coeffs_[checked_rank(indices)];
}

void SymmetricTensor::set(std::span<const int> indices, double value) {
  coeffs_[checked_rank(indices)] = value;
}

double SymmetricTensor::scalar() const {
  if (order() != 0) {
    throw std::invalid_argument("SymmetricTensor: scalar() needs order 0");
  }
  return coeffs_[0];
}

SymmetricTensor contract(const SymmetricTensor& t, std::span<const double> v) {
  if (t.order() < 1) {
    throw std::invalid_argument("contract: cannot contract an order-0 tensor");
  }
  if (static_cast<int>(v.size()) != t.dim()) {
    throw std::invalid_argument("contract: dimension mismatch");
  }
  SymmetricTensor result(t.dim(), t.order() - 1);
  kernels::contract(t.layout(), result.layout(), t.coeffs(), v,
                    result.mutable_coeffs());
  return result;
}

double apply_uniform(const SymmetricTensor& t, std::span<const double> u) {
  if (static_cast<int>(u.size()) != t.dim()) {
    throw std::invalid_argument("apply_uniform: dimension mismatch");
  }
  SymmetricTensor cur = t;
  while (cur.order() > 0) {
    cur = contract(cur, u);
  }
  return cur.scalar();
}

TensorCloseResult tensor_close(const SymmetricTensor& a,
                               const SymmetricTensor& b, double rel_tol) {
  if (a.dim() != b.dim() || a.order() != b.order()) {
    throw std::invalid_argument("tensor_close: shape mismatch");
  }
  double max_diff = 0.0;
  double max_abs = 0.0;
  const auto ca = a.coeffs();
  const auto cb = b.coeffs();
  for (std::size_t i = 0; i < ca.size(); ++i) {
    max_diff = std::max(max_diff, std::abs(ca[i] - cb[i]));
    max_abs = std::max({max_abs, std::abs(ca[i]), std::abs(cb[i])});
  }
  return {max_diff <= rel_tol * (1.0 + max_abs), max_diff};
}

}  // namespace homtaylor
