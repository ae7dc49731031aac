#include <doctest.h>

#include <cmath>

#include "homtaylor/json_io.hpp"

using namespace homtaylor;
using nlohmann::json;

TEST_CASE("tensor serialization uses the canonical coefficient order") {
  SymmetricTensor t(2, 2);
  t.set({0, 0}, 1.0);
  t.set({0, 1}, 2.0);
  t.set({1, 1}, 5.0);
  const json j = to_json(t);
  CHECK(j["order"] == 2);
  CHECK(j["dim"] == 2);
  CHECK(j["coeffs"] == json::array({1.0, 2.0, 5.0}));
}

TEST_CASE("taylor report carries exactly its field names") {
  TaylorReport r;
  r.f_a = 5.0;
  r.f_b = 1.0;
  r.taylor_standard = 0.6;
  r.taylor_collapsed = 0.6;
  r.identity_gap = 0.0;
  r.remainder = 0.4;
  r.euler_residuals = {0.0};
  r.order = 1;
  r.mode = TaylorMode::theorem;
  const json j = to_json(r);
  CHECK(j.size() == 9);
  for (const char* key :
       {"f_a", "f_b", "taylor_standard", "taylor_collapsed", "identity_gap",
        "remainder", "euler_residuals", "order", "mode"}) {
    CHECK(j.contains(key));
  }
  CHECK(j["mode"] == "theorem");
  CHECK(j["order"] == 1);
}

TEST_CASE("function spec round trip") {
  const json qr = json::parse(R"({"family":"quadratic_root",
                                  "R":[[1.0,0.5],[0.5,1.0]]})");
  const FunctionSpec spec = function_spec_from_json(qr);
  CHECK(spec.family == "quadratic_root");
  CHECK(spec.R[1][0] == 0.5);
  CHECK(to_json(spec) == qr);

  const json power = json::parse(R"({"family":"power","power":3,
      "inner":{"family":"pnorm","p":2.5,"dim":2}})");
  const FunctionSpec ps = function_spec_from_json(power);
  REQUIRE(ps.inner != nullptr);
  CHECK(ps.inner->family == "pnorm");
  CHECK(ps.inner->p == 2.5);
  CHECK(ps.power == 3);
  const auto fn = make_function(ps);
  CHECK(fn->degree() == 3.0);

  CHECK_THROWS_AS(
      function_spec_from_json(json::parse(R"({"family":"pnorm","P":3})")),
      std::invalid_argument);
  CHECK_THROWS_AS(function_spec_from_json(json::parse("[1,2]")),
                  std::invalid_argument);
}

TEST_CASE("portfolio parsing") {
  const json j = json::parse(R"({"R":[[1.0,0.5],[0.5,1.0]],
                                 "exposures":[1.0,1.0],
                                 "labels":["a","b"]})");
  const Portfolio p = portfolio_from_json(j);
  CHECK(p.exposures.size() == 2);
  CHECK(p.labels[1] == "b");
  validate(p);

  const json no_labels =
      json::parse(R"({"R":[[1.0]],"exposures":[2.0]})");
  CHECK(portfolio_from_json(no_labels).labels.empty());

  CHECK_THROWS(portfolio_from_json(json::parse(R"({"exposures":[1.0]})")));
}

TEST_CASE("allocation and identity reports") {
  AllocationReport a;
  a.capital = std::sqrt(3.0);
  a.allocations = {0.5, 0.5};
  a.check_sum_gap = 0.0;
  const json ja = to_json(a);
  CHECK(ja.size() == 3);
  CHECK(ja.contains("capital"));
  CHECK(ja.contains("allocations"));
  CHECK(ja.contains("check_sum_gap"));

  QuadraticIdentityReport q;
  q.lhs = 4.0;
  q.rhs = 4.0;
  q.gap = 0.0;
  const json jq = to_json(q);
  CHECK(jq.size() == 3);
  CHECK(jq["lhs"] == 4.0);
}
