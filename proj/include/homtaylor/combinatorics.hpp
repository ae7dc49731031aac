#pragma once

#include <cstdint>
#include <span>

namespace homtaylor {

// Desk-scale guards. Dense storage of jets and symmetric tensors grows like
// C(dim + order, order), so anything past these limits is rejected up front.
inline constexpr int kMaxDim = 16;
inline constexpr int kMaxOrder = 10;
inline constexpr int kMaxBinomialOrder = 20;

/// C(n, k) in exact 64-bit integer arithmetic. Throws std::overflow_error
/// if the value does not fit, std::invalid_argument for negative arguments.
std::int64_t binomial_exact(int n, int k);

/// k! as an exact integer (k <= 20), returned as double.
double factorial(int k);

/// Generalized binomial coefficient C(p, j) = p(p-1)...(p-j+1)/j! for real p.
double binomial_real(double p, int j);

/// Product of per-component factorials of an exponent multi-index.
double exponent_factorial(std::span<const int> alpha);

}  // namespace homtaylor
