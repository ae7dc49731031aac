#include "homtaylor/taylor.hpp"

#include <cmath>
#include <stdexcept>

#include "homtaylor/combinatorics.hpp"
#include "homtaylor/jet.hpp"

namespace homtaylor {

namespace {

void check_order(int m) {
  if (m < 1 || m > kMaxOrder) {
    throw std::invalid_argument("taylor: order must be in [1, 10]");
  }
}

void check_integer_degree(const HomogeneousFunction& f, int m) {
  if (std::abs(f.degree() - static_cast<double>(m)) > 1e-9) {
    throw std::invalid_argument(
        f.name() + ": homogeneity degree does not match the requested order");
  }
}

std::vector<double> difference(std::span<const double> b,
                               std::span<const double> a) {
  std::vector<double> d(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    d[i] = b[i] - a[i];
  }
  return d;
}

double chain_residual(const SymmetricTensor& t_k, const SymmetricTensor& t_km1,
                      std::span<const double> a, double factor) {
  const SymmetricTensor lhs = contract(t_k, a);
  SymmetricTensor rhs = t_km1;
  for (double& c : rhs.mutable_coeffs()) {
    c *= factor;
  }
  const TensorCloseResult res = tensor_close(lhs, rhs, 0.0);
  double max_abs = 0.0;
  for (double c : lhs.coeffs()) {
    max_abs = std::max(max_abs, std::abs(c));
  }
  for (double c : rhs.coeffs()) {
    max_abs = std::max(max_abs, std::abs(c));
  }
  return res.max_residual / (1.0 + max_abs);
}

}  // namespace

const char* to_string(TaylorMode mode) {
  return mode == TaylorMode::theorem ? "theorem" : "corollary";
}

std::vector<SymmetricTensor> derivative_tensors(const HomogeneousFunction& f,
                                                std::span<const double> a,
                                                int m) {
  if (m < 0 || m > kMaxOrder) {
    throw std::invalid_argument("derivative_tensors: order out of range");
  }
  const Jet jet = f.eval_jet(a, m);
  std::vector<SymmetricTensor> tensors;
  tensors.reserve(static_cast<std::size_t>(m) + 1);
  for (int k = 0; k <= m; ++k) {
    tensors.push_back(extract_tensor(jet, k));
  }
  return tensors;
}

double taylor_standard(const HomogeneousFunction& f, std::span<const double> a,
                       std::span<const double> b, int m) {
  check_order(m);
  if (!f.in_domain(b)) {
    throw std::domain_error(f.name() + ": b outside the smooth domain");
  }
  const std::vector<SymmetricTensor> tensors = derivative_tensors(f, a, m);
  const std::vector<double> d = difference(b, a);
  double acc = tensors[0].scalar();
  for (int k = 1; k <= m; ++k) {
    acc += apply_uniform(tensors[k], d) / factorial(k);
  }
  return acc;
}

double taylor_collapsed(const HomogeneousFunction& f, std::span<const double> a,
                        std::span<const double> b, int m) {
  check_order(m);
  check_integer_degree(f, m);
  if (!f.in_domain(b)) {
    throw std::domain_error(f.name() + ": b outside the smooth domain");
  }
  const Jet jet = f.eval_jet(a, m);
  const SymmetricTensor t_m = extract_tensor(jet, m);
  return apply_uniform(t_m, b) / factorial(m);
}

double taylor_power_collapsed(const HomogeneousFunction& f,
                              std::span<const double> a,
                              std::span<const double> b, int m) {
  check_order(m);
  if (std::abs(f.degree() - 1.0) > 1e-9) {
    throw std::invalid_argument(
        "taylor_power_collapsed: base function must have degree 1");
  }
  // f itself already is f^1.
  if (m == 1) {
    return taylor_collapsed(f, a, b, 1);
  }
  const FunctionPtr power_fn = make_power(
      std::shared_ptr<const HomogeneousFunction>(&f, [](auto*) {}), m);
  return taylor_collapsed(*power_fn, a, b, m);
}

double euler_chain_residual(const HomogeneousFunction& f,
                            std::span<const double> a, int m, int k) {
  check_integer_degree(f, m);
  if (k < 1 || k > kMaxOrder) {
    throw std::invalid_argument("euler_chain_residual: level out of range");
  }
  const Jet jet = f.eval_jet(a, k);
  const SymmetricTensor t_k = extract_tensor(jet, k);
  const SymmetricTensor t_km1 = extract_tensor(jet, k - 1);
  return chain_residual(t_k, t_km1, a, static_cast<double>(m - k + 1));
}

std::int64_t alternating_binomial_sum(int m, int q) {
  if (m < 0 || m > kMaxBinomialOrder || q < 0 || q > m) {
    throw std::invalid_argument(
        "alternating_binomial_sum: need 0 <= q <= m <= 20");
  }
  std::int64_t sum = 0;
  for (int k = q; k <= m; ++k) {
    const std::int64_t term = binomial_exact(m, k) * binomial_exact(k, k - q);
    sum += ((k - q) % 2 == 0) ? term : -term;
  }
  return sum;
}

TaylorReport build_report(const HomogeneousFunction& f,
                          std::span<const double> a, std::span<const double> b,
                          int m, TaylorMode mode) {
  check_order(m);
  FunctionPtr holder;
  const HomogeneousFunction* g = &f;
  if (mode == TaylorMode::corollary) {
    if (std::abs(f.degree() - 1.0) > 1e-9) {
      throw std::invalid_argument(
          "build_report: corollary mode needs a degree-1 function");
    }
    if (m > 1) {
      holder = make_power(
          std::shared_ptr<const HomogeneousFunction>(&f, [](auto*) {}), m);
      g = holder.get();
    }
  } else {
    check_integer_degree(f, m);
  }
  if (!g->in_domain(b)) {
    throw std::domain_error(g->name() + ": b outside the smooth domain");
  }

  const std::vector<SymmetricTensor> tensors = derivative_tensors(*g, a, m);
  const std::vector<double> d = difference(b, a);

  TaylorReport report;
  report.order = m;
  report.mode = mode;
  report.f_a = tensors[0].scalar();
  report.f_b = (*g)(b);
  double acc = report.f_a;
  for (int k = 1; k <= m; ++k) {
    acc += apply_uniform(tensors[k], d) / factorial(k);
  }
  report.taylor_standard = acc;
  report.taylor_collapsed = apply_uniform(tensors[m], b) / factorial(m);
  report.identity_gap =
      std::abs(report.taylor_standard - report.taylor_collapsed);
  report.remainder = report.f_b - report.taylor_standard;
  report.euler_residuals.reserve(static_cast<std::size_t>(m));
  for (int k = 1; k <= m; ++k) {
    report.euler_residuals.push_back(chain_residual(
        tensors[k], tensors[k - 1], a, static_cast<double>(m - k + 1)));
  }
  return report;
}

}  // namespace homtaylor
