#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "homtaylor/symtensor.hpp"

namespace homtaylor {

/// Canonical enumeration of the exponent multi-indices of a truncated
/// multivariate power series: all alpha in N^dim with |alpha| <= max_degree,
/// in ascending lexicographic order (so the constant term sits at rank 0).
/// One layout per (dim, max_degree) pair, shared via `get`.
class JetLayout {
 public:
  JetLayout(int dim, int max_degree);

  static std::shared_ptr<const JetLayout> get(int dim, int max_degree);

  int dim() const { return dim_; }
  int max_degree() const { return max_degree_; }
  std::size_t size() const { return size_; }

  std::span<const std::uint8_t> exponent(std::size_t pos) const {
    return {exps_.data() + pos * static_cast<std::size_t>(dim_),
            static_cast<std::size_t>(dim_)};
  }

  std::size_t rank(std::span<const int> alpha) const;

  bool same_shape(const JetLayout& other) const {
    return dim_ == other.dim_ && max_degree_ == other.max_degree_;
  }

 private:
  int dim_;
  int max_degree_;
  std::size_t size_;
  std::vector<std::uint8_t> exps_;
  std::vector<std::int64_t> choose_;
  int choose_stride_;

  std::int64_t choose(int a, int b) const {
    return choose_[static_cast<std::size_t>(a) * choose_stride_ + b];
  }

  friend class Jet;
};

/// Truncated multivariate power series of f(a + t) in t, total degree
/// <= max_degree. Coefficient c_alpha equals D^alpha f(a) / alpha!, so the
/// jet carries every derivative tensor up to the truncation order.
/// Value semantics; safe to share across threads.
class Jet {
 public:
  explicit Jet(std::shared_ptr<const JetLayout> layout, double constant = 0.0);

  static Jet constant(std::shared_ptr<const JetLayout> layout, double value) {
    return Jet(std::move(layout), value);
  }

  /// Coordinate seeds x_i = a_i + t_i: the i-th jet has constant a_i and
  /// unit coefficient on exponent e_i.
  static std::vector<Jet> variables(std::span<const double> point,
                                    int max_degree);

  int dim() const { return layout_->dim(); }
  int max_degree() const { return layout_->max_degree(); }
  const JetLayout& layout() const { return *layout_; }
  const std::shared_ptr<const JetLayout>& layout_ptr() const {
    return layout_;
  }

  /// Value of f at the expansion point (the degree-0 coefficient).
  double value() const { return coeffs_[0]; }

  double coeff(std::span<const int> alpha) const;
  double coeff(std::initializer_list<int> alpha) const {
    return coeff(std::span<const int>(alpha.begin(), alpha.size()));
  }

  std::span<const double> coeffs() const { return coeffs_; }
  std::span<double> mutable_coeffs() { return coeffs_; }

  Jet& operator+=(const Jet& rhs);
  Jet& operator-=(const Jet& rhs);
  Jet& operator*=(const Jet& rhs) { return *this = *this * rhs; }
  Jet& operator+=(double rhs);
  Jet& operator-=(double rhs);
  Jet& operator*=(double rhs);

  friend Jet operator+(Jet lhs, const Jet& rhs) { return lhs += rhs; }
  friend Jet operator-(Jet lhs, const Jet& rhs) { return lhs -= rhs; }
  friend Jet operator*(const Jet& lhs, const Jet& rhs);
  friend Jet operator+(Jet lhs, double rhs) { return lhs += rhs; }
  friend Jet operator+(double lhs, Jet rhs) { return rhs += lhs; }
  friend Jet operator-(Jet lhs, double rhs) { return lhs -= rhs; }
  friend Jet operator-(double lhs, const Jet& rhs);
  friend Jet operator*(Jet lhs, double rhs) { return lhs *= rhs; }
  friend Jet operator*(double lhs, Jet rhs) { return rhs *= lhs; }
  friend Jet operator/(Jet lhs, double rhs);
  friend Jet operator-(Jet j);

 private:
  void check_same_shape(const Jet& rhs) const;

  std::shared_ptr<const JetLayout> layout_;
  std::vector<double> coeffs_;
};

/// u^p truncated to the layout degree, via the generalized binomial series
/// around the constant term:
///   u^p = u0^p * sum_j C(p, j) w^j,  w = u / u0 - 1.
/// Requires u0 > 0 (throws std::domain_error otherwise). Terminates exactly
/// for integer p: C(p, j) = 0 for j > p.
Jet compose_binomial(const Jet& u, double p);

/// u^e. Non-negative integer exponents use repeated multiplication (valid for
/// any constant term); everything else falls back to compose_binomial.
Jet pow(const Jet& u, double e);

/// Order-k symmetric derivative tensor carried by the jet:
/// entry for multiset mu with exponent alpha is alpha! * c_alpha.
SymmetricTensor extract_tensor(const Jet& jet, int order);

}  // namespace homtaylor
