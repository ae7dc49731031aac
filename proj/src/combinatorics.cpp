#include "homtaylor/combinatorics.hpp"

#include <stdexcept>

namespace homtaylor {

std::int64_t binomial_exact(int n, int k) {
  if (n < 0 || k < 0) {
    throw std::invalid_argument("binomial_exact: negative argument");
  }
  if (k > n) {
    return 0;
  }
  if (k > n - k) {
    k = n - k;
  }
  // r * (n-k+i) is always divisible by i at step i, so every intermediate
  // value is an exact binomial coefficient.
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    std::int64_t num;
    if (__builtin_mul_overflow(r, static_cast<std::int64_t>(n - k + i), &num)) {
      throw std::overflow_error("binomial_exact: 64-bit overflow");
    }
    r = num / i;
  }
  return r;
}

double factorial(int k) {
  static constexpr std::int64_t table[] = {
      1LL,
      1LL,
      2LL,
      6LL,
      24LL,
      120LL,
      720LL,
      5040LL,
      40320LL,
      362880LL,
      3628800LL,
      39916800LL,
      479001600LL,
      6227020800LL,
      87178291200LL,
      1307674368000LL,
      20922789888000LL,
      355687428096000LL,
      6402373705728000LL,
      121645100408832000LL,
      2432902008176640000LL};
  if (k < 0 || k > 20) {
    throw std::invalid_argument("factorial: argument outside [0, 20]");
  }
  return static_cast<double>(table[k]);
}

double binomial_real(double p, int j) {
  if (j < 0) {
    throw std::invalid_argument("binomial_real: negative j");
  }
  double c = 1.0;
  for (int i = 1; i <= j; ++i) {
    c *= (p - static_cast<double>(i - 1)) / static_cast<double>(i);
  }
  return c;
}

double exponent_factorial(std::span<const int> alpha) {
  double f = 1.0;
  for (int a : alpha) {
    f *= factorial(a);
  }
  return f;
}

}  // namespace homtaylor
