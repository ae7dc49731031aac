#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "homtaylor/symtensor.hpp"

using namespace homtaylor;

namespace {

double uniform(std::mt19937_64& eng, double lo, double hi) {
  return lo + (hi - lo) * (static_cast<double>(eng() >> 11) * 0x1.0p-53);
}

SymmetricTensor random_tensor(int dim, int order, std::mt19937_64& eng) {
  SymmetricTensor t(dim, order);
  for (double& c : t.mutable_coeffs()) {
    c = uniform(eng, -1.0, 1.0);
  }
  return t;
}

// Brute-force oracle: the full sum over all dim^order index tuples,
// independent of the contraction kernels.
double dense_full_sum(const SymmetricTensor& t, std::span<const double> u) {
  const int n = t.dim();
  const int k = t.order();
  std::vector<int> idx(static_cast<std::size_t>(k), 0);
  double acc = 0.0;
  while (true) {
    double term = t.get(idx);
    for (int j = 0; j < k; ++j) {
      term *= u[idx[j]];
    }
    acc += term;
    int j = k - 1;
    while (j >= 0 && idx[j] == n - 1) {
      idx[j] = 0;
      --j;
    }
    if (j < 0) {
      break;
    }
    ++idx[j];
  }
  return acc;
}

// Brute-force single contraction over the last slot of the dense expansion.
SymmetricTensor dense_contract(const SymmetricTensor& t,
                               std::span<const double> v) {
  const int n = t.dim();
  const int k = t.order();
  SymmetricTensor out(n, k - 1);
  std::vector<int> idx(static_cast<std::size_t>(k - 1), 0);
  const TensorLayout& layout = out.layout();
  auto coeffs = out.mutable_coeffs();
  std::vector<int> full(static_cast<std::size_t>(k), 0);
  for (std::size_t pos = 0; pos < layout.size(); ++pos) {
    const auto mu = layout.multiset(pos);
    for (int j = 0; j < k - 1; ++j) {
      full[j] = mu[j];
    }
    double acc = 0.0;
    for (int i = 0; i < n; ++i) {
      full[k - 1] = i;
      acc += t.get(full) * v[i];
    }
    coeffs[pos] = acc;
  }
  return out;
}

}  // namespace

TEST_CASE("tensor_get reads any index order") {
  SymmetricTensor t(2, 2);
  t.set({0, 0}, 1.0);
  t.set({0, 1}, 2.0);
  t.set({1, 1}, 5.0);
  CHECK(t.get({1, 0}) == 2.0);
  CHECK(t.get({0, 0}) == 1.0);
  CHECK(t.get({0, 1}) == 2.0);

  SymmetricTensor scalar(3, 0);
  scalar.mutable_coeffs()[0] = 7.0;
  CHECK(scalar.get(std::span<const int>{}) == 7.0);
  CHECK(scalar.scalar() == 7.0);
}

TEST_CASE("tensor_get rejects bad indices") {
  SymmetricTensor t(2, 2);
  const int too_few[] = {0};
  const int out_of_range[] = {0, 2};
  CHECK_THROWS_AS(t.get(too_few), std::invalid_argument);
  CHECK_THROWS_AS(t.get(out_of_range), std::out_of_range);
}

TEST_CASE("layout guards") {
  CHECK_THROWS_AS(SymmetricTensor(17, 2), std::invalid_argument);
  CHECK_THROWS_AS(SymmetricTensor(2, 11), std::invalid_argument);
  CHECK_THROWS_AS(SymmetricTensor(0, 1), std::invalid_argument);
  // dense canonical storage size C(n+k-1, k)
  CHECK(SymmetricTensor(3, 4).coeffs().size() == 15);
  CHECK(SymmetricTensor(2, 0).coeffs().size() == 1);
}

TEST_CASE("multi index sorts and validates") {
  MultiIndex mi({2, 0, 1}, 3);
  CHECK(mi.order() == 3);
  CHECK(mi.indices()[0] == 0);
  CHECK(mi.indices()[2] == 2);
  CHECK_THROWS_AS(MultiIndex({3}, 3), std::out_of_range);
}

TEST_CASE("contract worked examples") {
  SymmetricTensor t(2, 2);
  t.set({0, 0}, 1.0);
  t.set({0, 1}, 2.0);
  t.set({1, 1}, 5.0);
  const std::vector<double> ones = {1.0, 1.0};
  const SymmetricTensor r = contract(t, ones);
  CHECK(r.order() == 1);
  CHECK(r.get({0}) == 3.0);  // row sums of [[1,2],[2,5]]
  CHECK(r.get({1}) == 7.0);

  const std::vector<double> e0 = {1.0, 0.0};
  const SymmetricTensor s = contract(r, e0);
  CHECK(s.scalar() == 3.0);
}

TEST_CASE("contract order-3 example against the dense expansion oracle") {
  // Only the multiset {0,0,1} is nonzero, with symmetric value 2.
  SymmetricTensor t(2, 3);
  t.set({0, 0, 1}, 2.0);
  const std::vector<double> v = {1.0, 1.0};
  const SymmetricTensor expected = dense_contract(t, v);
  const SymmetricTensor got = contract(t, v);
  // The dense 2x2x2 expansion gives result_00 = t_001 = 2,
  // result_01 = t_010 = 2, result_11 = 0.
  CHECK(expected.get({0, 0}) == 2.0);
  CHECK(expected.get({0, 1}) == 2.0);
  CHECK(expected.get({1, 1}) == 0.0);
  const TensorCloseResult close = tensor_close(got, expected, 1e-15);
  CHECK(close.close);
}

TEST_CASE("contract rejects bad shapes") {
  SymmetricTensor t(2, 2);
  const std::vector<double> v3 = {1.0, 1.0, 1.0};
  CHECK_THROWS_AS(contract(t, v3), std::invalid_argument);
  SymmetricTensor scalar(2, 0);
  const std::vector<double> v2 = {1.0, 1.0};
  CHECK_THROWS_AS(contract(scalar, v2), std::invalid_argument);
}

TEST_CASE("apply_uniform worked examples") {
  SymmetricTensor t(2, 2);
  t.set({0, 0}, 1.0);
  t.set({0, 1}, 2.0);
  t.set({1, 1}, 5.0);
  const std::vector<double> ones = {1.0, 1.0};
  CHECK(apply_uniform(t, ones) == doctest::Approx(10.0).epsilon(1e-15));

  // gradient of the euclidean norm at (3,4), contracted with (3,4)
  SymmetricTensor g(2, 1);
  g.set({0}, 0.6);
  g.set({1}, 0.8);
  const std::vector<double> a = {3.0, 4.0};
  CHECK(apply_uniform(g, a) == doctest::Approx(5.0).epsilon(1e-15));

  // order 3, only multiset {1,1,2} (0-based {0,0,1}) nonzero with value 2:
  // three permutations, each contributing 2 * 2*2*1 = 8
  SymmetricTensor t3(2, 3);
  t3.set({0, 0, 1}, 2.0);
  const std::vector<double> u = {2.0, 1.0};
  CHECK(apply_uniform(t3, u) == doctest::Approx(24.0).epsilon(1e-15));
  CHECK(dense_full_sum(t3, u) == doctest::Approx(24.0).epsilon(1e-15));
}

TEST_CASE("apply_uniform equals the successive contraction chain exactly") {
  std::mt19937_64 eng(123);
  for (int n = 1; n <= 3; ++n) {
    for (int k = 0; k <= 4; ++k) {
      SymmetricTensor t = random_tensor(n, k, eng);
      std::vector<double> u(static_cast<std::size_t>(n));
      for (double& x : u) {
        x = uniform(eng, -2.0, 2.0);
      }
      SymmetricTensor chain = t;
      while (chain.order() > 0) {
        chain = contract(chain, u);
      }
      CHECK(apply_uniform(t, u) == chain.scalar());  // bitwise
    }
  }
}

TEST_CASE("apply_uniform matches the dense expansion oracle") {
  std::mt19937_64 eng(321);
  for (int n = 1; n <= 3; ++n) {
    for (int k = 0; k <= 4; ++k) {
      SymmetricTensor t = random_tensor(n, k, eng);
      std::vector<double> u(static_cast<std::size_t>(n));
      for (double& x : u) {
        x = uniform(eng, -2.0, 2.0);
      }
      const double got = apply_uniform(t, u);
      const double expected = dense_full_sum(t, u);
      CHECK(std::abs(got - expected) <=
            1e-12 * (1.0 + std::max(std::abs(got), std::abs(expected))));
    }
  }
}

TEST_CASE("contract is linear") {
  std::mt19937_64 eng(77);
  for (int rep = 0; rep < 20; ++rep) {
    const int n = 3;
    const int k = 3;
    SymmetricTensor t = random_tensor(n, k, eng);
    std::vector<double> u(n), v(n);
    for (int i = 0; i < n; ++i) {
      u[i] = uniform(eng, -2.0, 2.0);
      v[i] = uniform(eng, -2.0, 2.0);
    }
    const double alpha = uniform(eng, -2.0, 2.0);
    const double beta = uniform(eng, -2.0, 2.0);
    std::vector<double> w(n);
    for (int i = 0; i < n; ++i) {
      w[i] = alpha * u[i] + beta * v[i];
    }
    const SymmetricTensor lhs = contract(t, w);
    SymmetricTensor rhs = contract(t, u);
    const SymmetricTensor rv = contract(t, v);
    auto rc = rhs.mutable_coeffs();
    for (std::size_t i = 0; i < rc.size(); ++i) {
      rc[i] = alpha * rc[i] + beta * rv.coeffs()[i];
    }
    CHECK(tensor_close(lhs, rhs, 1e-12).close);
  }
}

TEST_CASE("storage round-trip returns identical bits for any permutation") {
  std::mt19937_64 eng(55);
  SymmetricTensor t = random_tensor(3, 4, eng);
  const TensorLayout& layout = t.layout();
  for (std::size_t pos = 0; pos < layout.size(); ++pos) {
    const auto mu = layout.multiset(pos);
    std::vector<int> idx(mu.begin(), mu.end());
    const double stored = t.get(idx);
    for (int rep = 0; rep < 5; ++rep) {
      std::shuffle(idx.begin(), idx.end(), eng);
      CHECK(t.get(idx) == stored);  // identical bits
    }
  }
}

TEST_CASE("tensor_close") {
  SymmetricTensor a(2, 2);
  a.set({0, 0}, 1.0);
  a.set({0, 1}, 2.0);
  a.set({1, 1}, 5.0);
  SymmetricTensor b = a;

  const TensorCloseResult same = tensor_close(a, b, 1e-12);
  CHECK(same.close);
  CHECK(same.max_residual == 0.0);

  b.set({1, 1}, 5.0 + 1e-12);
  CHECK(tensor_close(a, b, 1e-9).close);

  SymmetricTensor c(2, 2);
  c.set({0, 0}, 1.0);
  SymmetricTensor d = c;
  d.set({1, 1}, 2.0);
  c.set({1, 1}, 1.0);
  const TensorCloseResult far = tensor_close(c, d, 1e-9);
  CHECK_FALSE(far.close);
  CHECK(far.max_residual == 1.0);

  SymmetricTensor e(2, 1);
  CHECK_THROWS_AS(tensor_close(a, e, 1e-9), std::invalid_argument);
}
