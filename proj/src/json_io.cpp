#include "homtaylor/json_io.hpp"

#include <stdexcept>

namespace homtaylor {

using nlohmann::json;

json to_json(const SymmetricTensor& t) {
  json j;
  j["order"] = t.order();
  j["dim"] = t.dim();
  j["coeffs"] = std::vector<double>(t.coeffs().begin(), t.coeffs().end());
  return j;
}

json to_json(const TaylorReport& report) {
  json j;
  j["f_a"] = report.f_a;
  j["f_b"] = report.f_b;
  j["taylor_standard"] = report.taylor_standard;
  j["taylor_collapsed"] = report.taylor_collapsed;
  j["identity_gap"] = report.identity_gap;
  j["remainder"] = report.remainder;
  j["euler_residuals"] = report.euler_residuals;
  j["order"] = report.order;
  j["mode"] = to_string(report.mode);
  return j;
}

json to_json(const AllocationReport& report) {
  json j;
  j["capital"] = report.capital;
  j["allocations"] = report.allocations;
  j["check_sum_gap"] = report.check_sum_gap;
  return j;
}

json to_json(const QuadraticIdentityReport& report) {
  json j;
  j["lhs"] = report.lhs;
  j["rhs"] = report.rhs;
  j["gap"] = report.gap;
  return j;
}

json to_json(const FunctionSpec& spec) {
  json j;
  j["family"] = spec.family;
  if (spec.family == "quadratic_root") {
    j["R"] = spec.R;
  } else if (spec.family == "monomial") {
    j["alpha"] = spec.alpha;
  } else if (spec.family == "pnorm") {
    j["p"] = spec.p;
    if (spec.dim > 0) {
      j["dim"] = spec.dim;
    }
  } else if (spec.family == "power") {
    j["power"] = spec.power;
    if (spec.inner) {
      j["inner"] = to_json(*spec.inner);
    }
  }
  return j;
}

FunctionSpec function_spec_from_json(const json& j) {
  if (!j.is_object()) {
    throw std::invalid_argument("function spec: expected a JSON object");
  }
  static const std::vector<std::string> known = {"family", "R",     "alpha",
                                                 "p",      "power", "inner",
                                                 "dim"};
  for (const auto& [key, value] : j.items()) {
    (void)value;
    bool ok = false;
    for (const auto& k : known) {
      if (key == k) {
        ok = true;
        break;
      }
    }
    if (!ok) {
      throw std::invalid_argument("function spec: unknown key \"" + key +
                                  "\"");
    }
  }
  FunctionSpec spec;
  spec.family = j.at("family").get<std::string>();
  if (j.contains("R")) {
    spec.R = j.at("R").get<Matrix>();
  }
  if (j.contains("alpha")) {
    spec.alpha = j.at("alpha").get<std::vector<double>>();
  }
  if (j.contains("p")) {
    spec.p = j.at("p").get<double>();
  }
  if (j.contains("power")) {
    spec.power = j.at("power").get<int>();
  }
  if (j.contains("dim")) {
    spec.dim = j.at("dim").get<int>();
  }
  if (j.contains("inner")) {
    spec.inner =
        std::make_shared<FunctionSpec>(function_spec_from_json(j.at("inner")));
  }
  return spec;
}

Portfolio portfolio_from_json(const json& j) {
  if (!j.is_object()) {
    throw std::invalid_argument("portfolio: expected a JSON object");
  }
  Portfolio p;
  p.matrix = j.at("R").get<Matrix>();
  p.exposures = j.at("exposures").get<std::vector<double>>();
  if (j.contains("labels")) {
    p.labels = j.at("labels").get<std::vector<std::string>>();
  }
  return p;
}

}  // namespace homtaylor
