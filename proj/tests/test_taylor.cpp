#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "homtaylor/taylor.hpp"
#include "homtaylor/verify.hpp"

using namespace homtaylor;

namespace {

// Closed-form derivatives of the euclidean norm: grad = x/r and
// hess = (I - x x^T / r^2) / r.
void norm_derivatives(const std::vector<double>& x, std::vector<double>& grad,
                      std::vector<std::vector<double>>& hess) {
  double r2 = 0.0;
  for (double v : x) {
    r2 += v * v;
  }
  const double r = std::sqrt(r2);
  grad.assign(x.size(), 0.0);
  hess.assign(x.size(), std::vector<double>(x.size(), 0.0));
  for (std::size_t i = 0; i < x.size(); ++i) {
    grad[i] = x[i] / r;
    for (std::size_t j = 0; j < x.size(); ++j) {
      hess[i][j] = ((i == j ? 1.0 : 0.0) - x[i] * x[j] / r2) / r;
    }
  }
}

}  // namespace

TEST_CASE("derivative_tensors of the euclidean norm at (3,4)") {
  const auto f = make_euclidean_norm(2);
  const std::vector<double> a = {3.0, 4.0};
  const auto tensors = derivative_tensors(*f, a, 2);
  REQUIRE(tensors.size() == 3);
  CHECK(tensors[0].scalar() == doctest::Approx(5.0).epsilon(1e-15));

  std::vector<double> grad;
  std::vector<std::vector<double>> hess;
  norm_derivatives(a, grad, hess);
  CHECK(grad[0] == doctest::Approx(0.6).epsilon(1e-15));
  CHECK(hess[0][0] == doctest::Approx(0.128).epsilon(1e-12));
  CHECK(hess[0][1] == doctest::Approx(-0.096).epsilon(1e-12));
  CHECK(hess[1][1] == doctest::Approx(0.072).epsilon(1e-12));
  for (int i = 0; i < 2; ++i) {
    CHECK(tensors[1].get({i}) == doctest::Approx(grad[i]).epsilon(1e-13));
    for (int j = 0; j < 2; ++j) {
      CHECK(tensors[2].get({i, j}) ==
            doctest::Approx(hess[i][j]).epsilon(1e-12));
    }
  }
}

TEST_CASE("derivative_tensors of a monomial") {
  const auto f = make_monomial({2.0, 1.0});
  const std::vector<double> a = {1.0, 1.0};
  const auto tensors = derivative_tensors(*f, a, 3);
  const SymmetricTensor& t3 = tensors[3];
  // d^3(x1^2 x2) is 2 on the multiset {1,1,2}, zero elsewhere
  CHECK(t3.get({0, 0, 1}) == 2.0);
  CHECK(t3.get({0, 0, 0}) == 0.0);
  CHECK(t3.get({0, 1, 1}) == 0.0);
  CHECK(t3.get({1, 1, 1}) == 0.0);
}

TEST_CASE("hessian of the squared norm is twice the identity") {
  const auto f = make_power(make_euclidean_norm(2), 2);
  for (const std::vector<double> a :
       {std::vector<double>{3.0, 4.0}, std::vector<double>{1.0, 2.0}}) {
    const auto tensors = derivative_tensors(*f, a, 2);
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        CHECK(tensors[2].get({i, j}) ==
              doctest::Approx(i == j ? 2.0 : 0.0).epsilon(1e-13));
      }
    }
  }
}

TEST_CASE("taylor_standard worked examples") {
  const auto norm = make_euclidean_norm(2);
  const std::vector<double> a = {3.0, 4.0};
  const std::vector<double> b = {1.0, 0.0};
  // 5 + (0.6, 0.8) . (-2, -4) = 0.6
  CHECK(taylor_standard(*norm, a, b, 1) ==
        doctest::Approx(0.6).epsilon(1e-13));

  const auto mono = make_monomial({2.0, 1.0});
  const std::vector<double> ma = {1.0, 1.0};
  const std::vector<double> mb = {2.0, 1.0};
  // full-order Taylor of a degree-3 polynomial is exact
  CHECK(taylor_standard(*mono, ma, mb, 3) ==
        doctest::Approx(4.0).epsilon(1e-14));
}

TEST_CASE("taylor_standard at b = a returns f(a) exactly") {
  for (const auto& entry : catalog()) {
    const auto rule = verify::rule_for_family(entry.family);
    verify::Rng rng(11);
    const auto a = verify::sample_point(entry.fn->dim(), rule, rng);
    const Jet jet = entry.fn->eval_jet(a, 2);
    CHECK(taylor_standard(*entry.fn, a, a, 2) == jet.value());
  }
}

TEST_CASE("taylor_collapsed worked examples") {
  const auto norm = make_euclidean_norm(2);
  const std::vector<double> a = {3.0, 4.0};
  const std::vector<double> b = {1.0, 0.0};
  // (0.6, 0.8) . (1, 0) = 0.6, equal to the standard form
  CHECK(taylor_collapsed(*norm, a, b, 1) ==
        doctest::Approx(0.6).epsilon(1e-13));

  const auto mono = make_monomial({2.0, 1.0});
  const std::vector<double> ma = {1.0, 1.0};
  const std::vector<double> mb = {2.0, 1.0};
  // (1/6) d^3 f(a; b,b,b) = 24/6 = 4 = f(b)
  CHECK(taylor_collapsed(*mono, ma, mb, 3) ==
        doctest::Approx(4.0).epsilon(1e-14));

  const auto sq = make_power(make_euclidean_norm(2), 2);
  const std::vector<double> qb = {1.0, 2.0};
  CHECK(taylor_collapsed(*sq, a, qb, 2) ==
        doctest::Approx(5.0).epsilon(1e-13));

  // degree mismatch is a contract violation
  CHECK_THROWS_AS(taylor_collapsed(*norm, a, b, 2), std::invalid_argument);
}

TEST_CASE("taylor_power_collapsed worked examples") {
  const auto norm = make_euclidean_norm(2);
  const std::vector<double> a = {3.0, 4.0};
  const std::vector<double> b = {1.0, 2.0};
  CHECK(taylor_power_collapsed(*norm, a, b, 2) ==
        doctest::Approx(5.0).epsilon(1e-13));

  // the order-2 case of the quadratic-root family: equals b^T R b
  const auto qr = make_quadratic_root({{1.0, 0.5}, {0.5, 1.0}});
  const std::vector<double> qa = {1.0, 1.0};
  const std::vector<double> qb = {2.0, 0.0};
  CHECK(taylor_power_collapsed(*qr, qa, qb, 2) ==
        doctest::Approx(4.0).epsilon(1e-13));

  // b = a reduces to f(a)^m through the chain identity
  const auto pn = make_pnorm(2, 3.0);
  const std::vector<double> ones = {1.0, 1.0};
  CHECK(taylor_power_collapsed(*pn, ones, ones, 3) ==
        doctest::Approx(2.0).epsilon(1e-13));

  const auto mono = make_monomial({2.0, 1.0});
  CHECK_THROWS_AS(taylor_power_collapsed(*mono, a, b, 2),
                  std::invalid_argument);
}

TEST_CASE("euler chain residual worked examples") {
  const auto norm = make_euclidean_norm(2);
  const std::vector<double> a = {3.0, 4.0};
  // grad . a = 5 = 1 * f(a)
  CHECK(euler_chain_residual(*norm, a, 1, 1) <= 1e-12);
  // level 2 at m = 1: hessian rows dotted with a vanish
  CHECK(euler_chain_residual(*norm, a, 1, 2) <= 1e-12);

  const auto mono = make_monomial({2.0, 1.0});
  const std::vector<double> ones = {1.0, 1.0};
  // grad f . a = (2,1).(1,1) = 3 = 3 f(a)
  CHECK(euler_chain_residual(*mono, ones, 3, 1) <= 1e-12);

  CHECK_THROWS_AS(euler_chain_residual(*norm, a, 1, 0),
                  std::invalid_argument);
  CHECK_THROWS_AS(euler_chain_residual(*norm, a, 2, 1),
                  std::invalid_argument);  // degree mismatch
}

TEST_CASE("alternating binomial sums") {
  // m=3, q=1: 3 - 6 + 3 = 0
  CHECK(alternating_binomial_sum(3, 1) == 0);
  // m=2, q=0: 1 - 2 + 1 = 0
  CHECK(alternating_binomial_sum(2, 0) == 0);
  // q = m keeps only the k = m term
  CHECK(alternating_binomial_sum(5, 5) == 1);

  for (int m = 0; m <= 12; ++m) {
    for (int q = 0; q <= m; ++q) {
      CHECK(alternating_binomial_sum(m, q) == (q == m ? 1 : 0));
    }
  }

  CHECK_THROWS_AS(alternating_binomial_sum(21, 0), std::invalid_argument);
  CHECK_THROWS_AS(alternating_binomial_sum(3, 4), std::invalid_argument);
  CHECK_THROWS_AS(alternating_binomial_sum(3, -1), std::invalid_argument);
}

TEST_CASE("build_report worked examples") {
  const auto norm = make_euclidean_norm(2);
  const std::vector<double> a = {3.0, 4.0};
  const std::vector<double> b = {1.0, 0.0};
  const TaylorReport r = build_report(*norm, a, b, 1, TaylorMode::theorem);
  CHECK(r.identity_gap <= 1e-12);
  CHECK(r.remainder == doctest::Approx(0.4).epsilon(1e-13));
  CHECK(r.f_b == doctest::Approx(1.0).epsilon(1e-15));
  REQUIRE(r.euler_residuals.size() == 1);
  CHECK(r.euler_residuals[0] <= 1e-12);

  const auto mono = make_monomial({2.0, 1.0});
  const std::vector<double> ma = {1.0, 1.0};
  const std::vector<double> mb = {2.0, 1.0};
  const TaylorReport rm = build_report(*mono, ma, mb, 3, TaylorMode::theorem);
  CHECK(rm.identity_gap <= 1e-12);
  CHECK(std::abs(rm.remainder) <= 1e-12);

  const auto pn = make_pnorm(2, 3.0);
  verify::Rng rng(42);
  const auto [pa, pb] =
      verify::sample_pair(*pn, verify::SampleRule::positive_box, rng);
  const TaylorReport rc = build_report(*pn, pa, pb, 2, TaylorMode::corollary);
  CHECK(rc.identity_gap <= 1e-9 * (1.0 + std::abs(rc.f_b)));
  CHECK(rc.order == 2);
  REQUIRE(rc.euler_residuals.size() == 2);

  // theorem mode insists on a matching degree
  CHECK_THROWS_AS(build_report(*pn, pa, pb, 2, TaylorMode::theorem),
                  std::invalid_argument);
}

TEST_CASE("central identity across the catalog and power cases") {
  const auto result = verify::central_identity(100, 42);
  CHECK(result.pass);
  CHECK(result.max_residual <= 1e-8);
}

TEST_CASE("corollary identity for degree-1 functions, m = 1..6") {
  const auto result = verify::corollary_powers(100, 42);
  CHECK(result.pass);
  CHECK(result.max_residual <= 1e-8);
}

TEST_CASE("euler chain across the catalog") {
  const auto result = verify::euler_chain(20, 42);
  CHECK(result.pass);
  CHECK(result.max_residual <= 1e-9);
}

TEST_CASE("polynomial exactness for the monomial family") {
  const auto result = verify::polynomial_exactness(100, 42);
  CHECK(result.pass);
  CHECK(result.max_residual <= 1e-10);
}

TEST_CASE("binomial identity suite is exact") {
  const auto result = verify::binomial_identity(12);
  CHECK(result.pass);
  CHECK(result.cases == 91);
  CHECK(result.max_residual == 0.0);
}

TEST_CASE("remainder shrinks like t^(m+1)") {
  struct Case {
    FunctionPtr fn;
    std::vector<double> a;
    std::vector<double> b;
  };
  const std::vector<Case> cases = {
      {make_euclidean_norm(2), {3.0, 4.0}, {1.0, 0.0}},
      {make_quadratic_root({{1.0, 0.3, 0.2}, {0.3, 1.0, 0.4}, {0.2, 0.4, 1.0}}),
       {1.0, 1.0, 1.0},
       {2.0, 0.5, 1.5}},
      {make_pnorm(2, 3.0), {1.0, 1.0}, {2.0, 1.5}},
  };
  for (const auto& c : cases) {
    const int m = static_cast<int>(std::lround(c.fn->degree()));
    for (double t : {0.1, 0.05, 0.025}) {
      auto point_at = [&](double s) {
        std::vector<double> p(c.a.size());
        for (std::size_t i = 0; i < p.size(); ++i) {
          p[i] = c.a[i] + s * (c.b[i] - c.a[i]);
        }
        return p;
      };
      auto remainder_at = [&](double s) {
        const auto bt = point_at(s);
        return (*c.fn)(bt) - taylor_standard(*c.fn, c.a, bt, m);
      };
      const double r_t = remainder_at(t);
      const double r_half = remainder_at(t / 2.0);
      if (std::abs(r_t) > 1e-12) {
        CHECK(std::abs(r_half) / std::abs(r_t) <=
              0.6 * std::pow(2.0, -m) + 0.2);
      }
    }
  }
}

TEST_CASE("collapsed form contracts with b, not b - a") {
  const auto norm = make_euclidean_norm(2);
  const std::vector<double> a = {3.0, 4.0};
  const std::vector<double> b = {1.0, 0.0};
  const auto tensors = derivative_tensors(*norm, a, 1);
  const std::vector<double> d = {b[0] - a[0], b[1] - a[1]};
  const double with_b = taylor_collapsed(*norm, a, b, 1);
  const double with_diff = apply_uniform(tensors[1], d) / 1.0;
  // (0.6, 0.8).(1,0) = 0.6 versus (0.6, 0.8).(-2,-4) = -4.4
  CHECK(std::abs(with_b - with_diff) > 1e-3);
}
