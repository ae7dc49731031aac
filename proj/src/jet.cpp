#include "homtaylor/jet.hpp"

#include <array>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>

#include "homtaylor/combinatorics.hpp"
#include "homtaylor/kernels.hpp"

namespace homtaylor {

JetLayout::JetLayout(int dim, int max_degree)
    : dim_(dim), max_degree_(max_degree) {
  if (dim < 1 || dim > kMaxDim) {
    throw std::invalid_argument("JetLayout: dim must be in [1, " +
                                std::to_string(kMaxDim) + "]");
  }
  if (max_degree < 0 || max_degree > kMaxOrder) {
    throw std::invalid_argument("JetLayout: max_degree must be in [0, " +
                                std::to_string(kMaxOrder) + "]");
  }
  size_ = static_cast<std::size_t>(binomial_exact(dim + max_degree, max_degree));

  choose_stride_ = dim + max_degree + 1;
  choose_.assign(static_cast<std::size_t>(choose_stride_) * choose_stride_, 0);
  for (int a = 0; a < choose_stride_; ++a) {
    for (int b = 0; b <= a; ++b) {
      choose_[static_cast<std::size_t>(a) * choose_stride_ + b] =
          binomial_exact(a, b);
    }
  }

  // Ascending lexicographic enumeration of exponents with |alpha| <= m.
  exps_.reserve(size_ * static_cast<std::size_t>(dim_));
  std::vector<std::uint8_t> alpha(static_cast<std::size_t>(dim_), 0);
  int total = 0;
  for (std::size_t pos = 0; pos < size_; ++pos) {
    exps_.insert(exps_.end(), alpha.begin(), alpha.end());
    if (total < max_degree_) {
      ++alpha[dim_ - 1];
      ++total;
      continue;
    }
    int j = dim_ - 1;
    while (j >= 0 && alpha[j] == 0) {
      --j;
    }
    if (j <= 0) {
      break;  // alpha == (m, 0, ..., 0), the lexicographic maximum
    }
    total -= alpha[j];
    alpha[j] = 0;
    ++alpha[j - 1];
    ++total;
  }
}

std::size_t JetLayout::rank(std::span<const int> alpha) const {
  std::size_t r = 0;
  int used = 0;
  for (int i = 0; i < dim_; ++i) {
    const int rest = dim_ - 1 - i;
    for (int v = 0; v < alpha[i]; ++v) {
      r += static_cast<std::size_t>(choose(max_degree_ - used - v + rest, rest));
    }
    used += alpha[i];
  }
  return r;
}

std::shared_ptr<const JetLayout> JetLayout::get(int dim, int max_degree) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::shared_ptr<const JetLayout>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& entry = cache[{dim, max_degree}];
  if (!entry) {
    entry = std::make_shared<const JetLayout>(dim, max_degree);
  }
  return entry;
}

Jet::Jet(std::shared_ptr<const JetLayout> layout, double constant)
    : layout_(std::move(layout)), coeffs_(layout_->size(), 0.0) {
  coeffs_[0] = constant;
}

std::vector<Jet> Jet::variables(std::span<const double> point,
                                int max_degree) {
  const int n = static_cast<int>(point.size());
  auto layout = JetLayout::get(n, max_degree);
  std::vector<Jet> vars;
  vars.reserve(point.size());
  std::vector<int> unit(point.size(), 0);
  for (int i = 0; i < n; ++i) {
    Jet j(layout, point[i]);
    if (max_degree >= 1) {
      unit[i] = 1;
      j.coeffs_[layout->rank(unit)] = 1.0;
      unit[i] = 0;
    }
    vars.push_back(std::move(j));
  }
  return vars;
}

double Jet::coeff(std::span<const int> alpha) const {
  if (static_cast<int>(alpha.size()) != dim()) {
    throw std::invalid_argument("Jet: exponent arity mismatch");
  }
  int total = 0;
  for (int a : alpha) {
    if (a < 0) {
      throw std::invalid_argument("Jet: negative exponent");
    }
    total += a;
  }
  if (total > max_degree()) {
    throw std::invalid_argument("Jet: exponent degree above truncation");
  }
  return coeffs_[layout_->rank(alpha)];
}

void Jet::check_same_shape(const Jet& rhs) const {
  if (!layout_->same_shape(*rhs.layout_)) {
    throw std::invalid_argument("Jet: shape mismatch");
  }
}

Jet& Jet::operator+=(const Jet& rhs) {
  check_same_shape(rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    coeffs_[i] += rhs.coeffs_[i];
  }
  return *this;
}

Jet& Jet::operator-=(const Jet& rhs) {
  check_same_shape(rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    coeffs_[i] -= rhs.coeffs_[i];
  }
  return *this;
}

Jet& Jet::operator+=(double rhs) {
  coeffs_[0] += rhs;
  return *this;
}

Jet& Jet::operator-=(double rhs) {
  coeffs_[0] -= rhs;
  return *this;
}

Jet& Jet::operator*=(double rhs) {
  for (double& c : coeffs_) {
    c *= rhs;
  }
  return *this;
}

Jet operator*(const Jet& lhs, const Jet& rhs) {
  lhs.check_same_shape(rhs);
  Jet out(lhs.layout_, 0.0);
  kernels::jet_mul(*lhs.layout_, lhs.coeffs_, rhs.coeffs_, out.coeffs_);
  return out;
}

Jet operator-(double lhs, const Jet& rhs) {
  Jet out = -rhs;
  out += lhs;
  return out;
}

Jet operator/(Jet lhs, double rhs) {
  // true division: keeps u0/u0 == 1 exactly, which compose_binomial relies on
  for (double& c : lhs.coeffs_) {
    c /= rhs;
  }
  return lhs;
}

Jet operator-(Jet j) {
  for (double& c : j.mutable_coeffs()) {
    c = -c;
  }
  return j;
}

Jet compose_binomial(const Jet& u, double p) {
  const double u0 = u.value();
  if (!(u0 > 0.0)) {
    throw std::domain_error(
        "compose_binomial: constant term must be positive");
  }
  const int m = u.max_degree();
  // w = u/u0 - 1 has zero constant term, so w^j starts at degree j and the
  // series terminates at j = m.
  Jet w = u / u0;
  w -= 1.0;
  Jet acc = Jet::constant(u.layout_ptr(), 1.0);
  Jet w_pow = Jet::constant(u.layout_ptr(), 1.0);
  for (int j = 1; j <= m; ++j) {
    w_pow = w_pow * w;
    const double c = binomial_real(p, j);
    if (c != 0.0) {
      acc += w_pow * c;
    }
  }
  acc *= std::pow(u0, p);
  return acc;
}

Jet pow(const Jet& u, double e) {
  if (e >= 0.0 && e == std::floor(e) && e <= 1000.0) {
    const int n = static_cast<int>(e);
    Jet r = Jet::constant(u.layout_ptr(), 1.0);
    for (int i = 0; i < n; ++i) {
      r = r * u;
    }
    return r;
  }
  return compose_binomial(u, e);
}

SymmetricTensor extract_tensor(const Jet& jet, int order) {
  if (order < 0 || order > jet.max_degree()) {
    throw std::invalid_argument("extract_tensor: order above jet degree");
  }
  SymmetricTensor t(jet.dim(), order);
  const TensorLayout& tl = t.layout();
  std::array<int, kMaxDim> alpha;
  auto out = t.mutable_coeffs();
  for (std::size_t pos = 0; pos < tl.size(); ++pos) {
    const auto mu = tl.multiset(pos);
    alpha.fill(0);
    for (std::uint8_t i : mu) {
      ++alpha[i];
    }
    const std::span<const int> a(alpha.data(),
                                 static_cast<std::size_t>(jet.dim()));
    out[pos] = exponent_factorial(a) * jet.coeffs()[jet.layout().rank(a)];
  }
  return t;
}

}  // namespace homtaylor
