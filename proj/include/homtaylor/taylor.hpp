#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "homtaylor/homfun.hpp"
#include "homtaylor/symtensor.hpp"

namespace homtaylor {

enum class TaylorMode { theorem, corollary };

/// Results of one comparison of the standard order-m Taylor polynomial with
/// its collapsed single-term form.
struct TaylorReport {
  double f_a = 0.0;
  double f_b = 0.0;
  double taylor_standard = 0.0;
  double taylor_collapsed = 0.0;
  double identity_gap = 0.0;  // |taylor_standard - taylor_collapsed|
  double remainder = 0.0;     // f_b - taylor_standard
  std::vector<double> euler_residuals;  // one per chain level k = 1..m
  int order = 0;
  TaylorMode mode = TaylorMode::theorem;
};

const char* to_string(TaylorMode mode);

/// Derivative tensors of f at a, orders 0..m, from a single degree-m jet.
std::vector<SymmetricTensor> derivative_tensors(const HomogeneousFunction& f,
                                                std::span<const double> a,
                                                int m);

/// f(a) + sum_{k=1..m} (1/k!) d^k f(a; b-a): the plain Taylor polynomial,
/// contracted with the displacement b - a.
double taylor_standard(const HomogeneousFunction& f, std::span<const double> a,
                       std::span<const double> b, int m);

/// (1/m!) d^m f(a; b): the collapsed form for degree-m homogeneous f. The
/// contraction direction is b itself, not b - a. Throws
/// std::invalid_argument unless f.degree equals m.
double taylor_collapsed(const HomogeneousFunction& f, std::span<const double> a,
                        std::span<const double> b, int m);

/// Collapsed form for f^m where f has degree 1.
double taylor_power_collapsed(const HomogeneousFunction& f,
                              std::span<const double> a,
                              std::span<const double> b, int m);

/// Relative residual of the chain identity
///   contract(T_k, a) = (m - k + 1) * T_{k-1}
/// for a function of degree m, normalized as in tensor_close. Levels above m
/// are allowed (the factor is then zero or negative, and still exact).
double euler_chain_residual(const HomogeneousFunction& f,
                            std::span<const double> a, int m, int k);

/// sum_{k=q..m} (-1)^{k-q} C(m,k) C(k,k-q) in exact integer arithmetic.
/// Equals 1 for q == m and 0 for q < m. Guarded to m <= 20.
std::int64_t alternating_binomial_sum(int m, int q);

/// Runs the full comparison. In corollary mode f must have degree 1 and the
/// report describes f^m; in theorem mode f itself must have degree m.
TaylorReport build_report(const HomogeneousFunction& f,
                          std::span<const double> a, std::span<const double> b,
                          int m, TaylorMode mode);

}  // namespace homtaylor
