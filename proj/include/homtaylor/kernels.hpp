#pragma once

#include <cstddef>
#include <span>

namespace homtaylor {

class JetLayout;
class TensorLayout;

// Inner loops of jet multiplication and tensor contraction. Each output
// coefficient is an independent gather over a fixed enumeration of inputs,
// so the OpenMP variants split outputs across threads and produce bitwise
// the same result as the serial reference for any thread count. Output
// spans must not alias the inputs.
namespace kernels {

/// Coefficient `pos` of the truncated Cauchy product x*y on layout.
/// Sums x[beta] * y[alpha - beta] over all beta <= alpha componentwise,
/// in ascending lexicographic order of beta.
double product_coeff(const JetLayout& layout, std::span<const double> x,
                     std::span<const double> y, std::size_t pos);

void jet_mul_serial(const JetLayout& layout, std::span<const double> x,
                    std::span<const double> y, std::span<double> out);
void jet_mul_parallel(const JetLayout& layout, std::span<const double> x,
                      std::span<const double> y, std::span<double> out);
/// Dispatches to the parallel kernel for large layouts.
void jet_mul(const JetLayout& layout, std::span<const double> x,
             std::span<const double> y, std::span<double> out);

/// Coefficient `pos` of the single contraction of t with v:
/// sums t[multiset(pos) + {i}] * v[i] for i = 0..dim-1 ascending, which
/// visits the parent multisets in ascending lexicographic order.
double contract_coeff(const TensorLayout& parent, const TensorLayout& child,
                      std::span<const double> t, std::span<const double> v,
                      std::size_t pos);

void contract_serial(const TensorLayout& parent, const TensorLayout& child,
                     std::span<const double> t, std::span<const double> v,
                     std::span<double> out);
void contract_parallel(const TensorLayout& parent, const TensorLayout& child,
                       std::span<const double> t, std::span<const double> v,
                       std::span<double> out);
void contract(const TensorLayout& parent, const TensorLayout& child,
              std::span<const double> t, std::span<const double> v,
              std::span<double> out);

/// Output sizes at or above this use the parallel kernels.
inline constexpr std::size_t kParallelCutoff = 2048;

}  // namespace kernels
}  // namespace homtaylor
