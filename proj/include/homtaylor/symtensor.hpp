#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace homtaylor {

/// Canonical enumeration of the index multisets of a fully symmetric tensor:
/// all non-decreasing tuples (mu_1 <= ... <= mu_k) with entries in [0, dim),
/// in ascending lexicographic order. One layout instance per (dim, order)
/// pair, shared via the `get` registry.
class TensorLayout {
 public:
  TensorLayout(int dim, int order);

  static std::shared_ptr<const TensorLayout> get(int dim, int order);

  int dim() const { return dim_; }
  int order() const { return order_; }
  std::size_t size() const { return size_; }

  /// Multiset at a canonical position, as `order` non-decreasing indices.
  std::span<const std::uint8_t> multiset(std::size_t pos) const {
    return {tuples_.data() + pos * static_cast<std::size_t>(order_),
            static_cast<std::size_t>(order_)};
  }

  /// Canonical position of a sorted (non-decreasing) index tuple.
  std::size_t rank(std::span<const int> sorted_indices) const;

  /// Position of the order+1 multiset obtained by inserting `extra` into a
  /// sorted tuple of this layout's order, ranked in the (dim, order+1) layout.
  static std::size_t rank_with_insert(const TensorLayout& parent,
                                      std::span<const std::uint8_t> sorted,
                                      int extra);

 private:
  int dim_;
  int order_;
  std::size_t size_;
  std::vector<std::uint8_t> tuples_;
  std::vector<std::int64_t> choose_;  // C(a, b) for a <= dim + order
  int choose_stride_;

  std::int64_t choose(int a, int b) const {
    return choose_[static_cast<std::size_t>(a) * choose_stride_ + b];
  }
};

/// Multi-index of a symmetric tensor entry: a multiset of `order` dimension
/// indices, stored sorted.
class MultiIndex {
 public:
  MultiIndex(std::vector<int> indices, int dim);

  int order() const { return static_cast<int>(indices_.size()); }
  int dim() const { return dim_; }
  std::span<const int> indices() const { return indices_; }

 private:
  std::vector<int> indices_;
  int dim_;
};

/// Fully symmetric tensor of derivatives, one stored coefficient per index
/// multiset (the symmetric value itself, not multiplicity-weighted).
/// Immutable in normal use; all operations return fresh values.
class SymmetricTensor {
 public:
  SymmetricTensor(int dim, int order);
  SymmetricTensor(int dim, int order, std::vector<double> canonical_coeffs);

  int dim() const { return layout_->dim(); }
  int order() const { return layout_->order(); }
  const TensorLayout& layout() const { return *layout_; }

  /// Entry for the given indices, in any order.
  double get(std::span<const int> indices) const;
  double get(std::initializer_list<int> indices) const {
    return get(std::span<const int>(indices.begin(), indices.size()));
  }
  void set(std::span<const int> indices, double value);
  void set(std::initializer_list<int> indices, double value) {
    set(std::span<const int>(indices.begin(), indices.size()), value);
  }

  /// Value of an order-0 tensor.
  double scalar() const;

  std::span<const double> coeffs() const { return coeffs_; }
  std::span<double> mutable_coeffs() { return coeffs_; }

 private:
  std::size_t checked_rank(std::span<const int> indices) const;

  std::shared_ptr<const TensorLayout> layout_;
  std::vector<double> coeffs_;
};

/// Single contraction over the last slot:
///   result_{mu_1..mu_{k-1}} = sum_mu t_{mu_1..mu_{k-1} mu} v_mu.
SymmetricTensor contract(const SymmetricTensor& t, std::span<const double> v);

/// Full contraction with k copies of u, evaluated as `order` successive
/// single contractions (and therefore bit-identical to that chain).
double apply_uniform(const SymmetricTensor& t, std::span<const double> u);

struct TensorCloseResult {
  bool close = false;
  double max_residual = 0.0;  // max absolute coefficient difference
};

/// Compares coefficient-wise: close iff
///   max |a_i - b_i| <= rel_tol * (1 + max(|a|_inf, |b|_inf)).
TensorCloseResult tensor_close(const SymmetricTensor& a,
                               const SymmetricTensor& b, double rel_tol);

}  // namespace homtaylor
