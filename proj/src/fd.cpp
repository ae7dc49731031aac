#include "homtaylor/fd.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>
#include <vector>

namespace homtaylor {

namespace {

class StencilEvaluator {
 public:
  StencilEvaluator(const HomogeneousFunction& f, std::span<const double> a,
                   double h)
      : f_(f), a_(a.begin(), a.end()), h_(h), offset_(a.size(), 0) {}

  // Nested central difference over the index list, sharing evaluations
  // through the offset memo.
  double derivative(std::span<const int> indices) {
    if (indices.empty()) {
      return value_at_offset();
    }
    const int i = indices.front();
    const auto rest = indices.subspan(1);
    offset_[i] += 1;
    const double fp = derivative(rest);
    offset_[i] -= 2;
    const double fm = derivative(rest);
    offset_[i] += 1;
    return (fp - fm) / (2.0 * h_);
  }

 private:
  double value_at_offset() {
    auto it = memo_.find(offset_);
    if (it != memo_.end()) {
      return it->second;
    }
    std::vector<double> x(a_);
    for (std::size_t i = 0; i < x.size(); ++i) {
      x[i] += h_ * offset_[i];
    }
    if (!f_.in_domain(x)) {
      throw std::domain_error("fd_tensor: stencil point leaves the domain");
    }
    const double v = f_(x);
    memo_.emplace(offset_, v);
    return v;
  }

  const HomogeneousFunction& f_;
  std::vector<double> a_;
  double h_;
  std::vector<int> offset_;
  std::map<std::vector<int>, double> memo_;
};

}  // namespace

SymmetricTensor fd_tensor(const HomogeneousFunction& f,
                          std::span<const double> a, int order, double step) {
  if (order < 0 || order > 4) {
    throw std::invalid_argument("fd_tensor: order must be in [0, 4]");
  }
  if (static_cast<int>(a.size()) != f.dim()) {
    throw std::invalid_argument("fd_tensor: dimension mismatch");
  }
  double h = step;
  if (!(h > 0.0)) {
    double a_inf = 0.0;
    for (double ai : a) {
      a_inf = std::max(a_inf, std::abs(ai));
    }
    h = std::pow(std::numeric_limits<double>::epsilon(),
                 1.0 / (order + 2)) *
        (1.0 + a_inf);
  }

  StencilEvaluator eval(f, a, h);
  SymmetricTensor t(f.dim(), order);
  auto out = t.mutable_coeffs();
  const TensorLayout& layout = t.layout();
  std::vector<int> indices(static_cast<std::size_t>(order));
  for (std::size_t pos = 0; pos < layout.size(); ++pos) {
    const auto mu = layout.multiset(pos);
    for (int j = 0; j < order; ++j) {
      indices[j] = mu[j];
    }
    out[pos] = eval.derivative(indices);
  }
  return t;
}

}  // namespace homtaylor
