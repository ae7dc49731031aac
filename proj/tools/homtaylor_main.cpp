// Command-line front end: evaluates the collapsed Taylor identity for
// positively homogeneous functions, runs the seeded verification suites,
// prints the alternating-binomial table, and aggregates risk portfolios.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "homtaylor/combinatorics.hpp"
#include "homtaylor/homfun.hpp"
#include "homtaylor/json_io.hpp"
#include "homtaylor/riskagg.hpp"
#include "homtaylor/taylor.hpp"
#include "homtaylor/verify.hpp"

namespace {

using namespace homtaylor;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitBadConfig = 2;
constexpr int kExitDomain = 3;

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

std::vector<double> parse_vector(const std::string& text) {
  std::vector<double> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("cannot parse number: \"" + item + "\"");
    }
    while (used < item.size() && std::isspace(item[used])) {
      ++used;
    }
    if (used != item.size()) {
      throw std::invalid_argument("cannot parse number: \"" + item + "\"");
    }
    values.push_back(v);
  }
  if (values.empty()) {
    throw std::invalid_argument("empty vector: \"" + text + "\"");
  }
  return values;
}

Matrix parse_matrix(const std::string& text) {
  Matrix rows;
  std::stringstream ss(text);
  std::string row;
  while (std::getline(ss, row, ';')) {
    rows.push_back(parse_vector(row));
  }
  if (rows.empty()) {
    throw std::invalid_argument("empty matrix: \"" + text + "\"");
  }
  return rows;
}

nlohmann::json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("cannot open file: " + path);
  }
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
  return j;
}

struct TaylorOptions {
  std::string family;
  std::string alpha;
  double p = 0.0;
  int power = 0;
  std::string r_text;
  std::string spec_path;
  std::string a_text;
  std::string b_text;
  int order = 0;
  double tol = 1e-8;
  bool json = false;
};

FunctionPtr build_function(const TaylorOptions& opt, int dim) {
  if (!opt.spec_path.empty()) {
    return make_function(function_spec_from_json(load_json_file(opt.spec_path)),
                         dim);
  }
  FunctionPtr f;
  if (opt.family == "euclidean") {
    f = make_euclidean_norm(dim);
  } else if (opt.family == "quadratic_root") {
    if (opt.r_text.empty()) {
      throw std::invalid_argument("quadratic_root needs --R");
    }
    f = make_quadratic_root(parse_matrix(opt.r_text));
  } else if (opt.family == "monomial") {
    if (opt.alpha.empty()) {
      throw std::invalid_argument("monomial needs --alpha");
    }
    f = make_monomial(parse_vector(opt.alpha));
  } else if (opt.family == "pnorm") {
    f = make_pnorm(dim, opt.p);
  } else if (opt.family.empty()) {
    throw std::invalid_argument("set --family or --spec");
  } else {
    throw std::invalid_argument("unknown family: " + opt.family);
  }
  if (opt.power > 0) {
    f = make_power(std::move(f), opt.power);
  }
  return f;
}

int run_taylor(const TaylorOptions& opt) {
  const std::vector<double> a = parse_vector(opt.a_text);
  const std::vector<double> b = parse_vector(opt.b_text);
  if (a.size() != b.size()) {
    throw std::invalid_argument("a and b must have the same dimension");
  }
  const FunctionPtr f = build_function(opt, static_cast<int>(a.size()));
  if (f->dim() != static_cast<int>(a.size())) {
    throw std::invalid_argument("function dimension does not match the points");
  }

  TaylorMode mode;
  if (std::abs(f->degree() - opt.order) <= 1e-9) {
    mode = TaylorMode::theorem;
  } else if (std::abs(f->degree() - 1.0) <= 1e-9) {
    mode = TaylorMode::corollary;
  } else {
    throw std::invalid_argument(
        "order does not match the homogeneity degree (and the function does "
        "not have degree 1)");
  }

  if (!f->in_domain(a) || !f->in_domain(b) || !segment_in_domain(*f, a, b)) {
    throw std::domain_error(
        "the segment from a to b leaves the smooth domain");
  }

  const TaylorReport report = build_report(*f, a, b, opt.order, mode);
  const double scale =
      1.0 + std::abs(report.f_a) + std::abs(report.f_b);
  const bool pass = report.identity_gap <= opt.tol * scale;

  if (opt.json) {
    std::cout << to_json(report).dump() << "\n";
  } else {
    std::cout << "function         : " << f->name() << " (degree "
              << fmt(f->degree()) << ")\n";
    std::cout << "mode             : " << to_string(report.mode) << " (m="
              << report.order << ")\n";
    std::cout << "f(a)             : " << fmt(report.f_a) << "\n";
    std::cout << "f(b)             : " << fmt(report.f_b) << "\n";
    std::cout << "taylor_standard  : " << fmt(report.taylor_standard) << "\n";
    std::cout << "taylor_collapsed : " << fmt(report.taylor_collapsed) << "\n";
    std::cout << "identity_gap     : " << fmt(report.identity_gap) << "\n";
    std::cout << "remainder        : " << fmt(report.remainder) << "\n";
    std::cout << "euler_residuals  :";
    for (double r : report.euler_residuals) {
      std::cout << " " << fmt(r);
    }
    std::cout << "\n";
    std::cout << "result           : " << (pass ? "PASS" : "FAIL")
              << " (identity_gap <= " << fmt(opt.tol)
              << " * (1+|f(a)|+|f(b)|))\n";
  }
  return pass ? kExitPass : kExitCheckFailed;
}

struct VerifyOptions {
  std::string suite = "all";
  int trials = 100;
  std::uint64_t seed = 42;
  int max_m = 12;
  bool json = false;
};

int run_verify(const VerifyOptions& opt) {
  const std::vector<verify::SuiteResult> results =
      verify::run_suites(opt.suite, opt.trials, opt.seed, opt.max_m);
  bool all_pass = true;
  if (opt.json) {
    nlohmann::json j;
    j["seed"] = opt.seed;
    j["trials"] = opt.trials;
    nlohmann::json suites = nlohmann::json::array();
    for (const auto& r : results) {
      nlohmann::json s;
      s["suite"] = r.suite;
      s["cases"] = r.cases;
      s["max_residual"] = r.max_residual;
      s["tolerance"] = r.tolerance;
      s["pass"] = r.pass;
      s["worst_case"] = r.worst_case;
      suites.push_back(s);
      all_pass = all_pass && r.pass;
    }
    j["suites"] = suites;
    std::cout << j.dump() << "\n";
  } else {
    std::printf("%-12s %8s %14s %12s  %s\n", "suite", "cases", "max_residual",
                "tolerance", "status");
    for (const auto& r : results) {
      std::printf("%-12s %8d %14.6g %12.6g  %s\n", r.suite.c_str(), r.cases,
                  r.max_residual, r.tolerance, r.pass ? "PASS" : "FAIL");
      if (!r.pass) {
        std::printf("  worst case (seed %llu): %s\n",
                    static_cast<unsigned long long>(opt.seed),
                    r.worst_case.c_str());
      }
      all_pass = all_pass && r.pass;
    }
    std::printf("%s\n", all_pass ? "all suites passed" : "suite failures");
  }
  return all_pass ? kExitPass : kExitCheckFailed;
}

struct IdentityOptions {
  int max_m = 12;
  bool json = false;
};

int run_identity(const IdentityOptions& opt) {
  if (opt.max_m < 0 || opt.max_m > kMaxBinomialOrder) {
    throw std::invalid_argument("--max-m must be in [0, 20]");
  }
  bool kronecker = true;
  std::vector<std::vector<std::int64_t>> table;
  for (int m = 0; m <= opt.max_m; ++m) {
    std::vector<std::int64_t> row;
    for (int q = 0; q <= m; ++q) {
      const std::int64_t v = alternating_binomial_sum(m, q);
      kronecker = kronecker && (v == (q == m ? 1 : 0));
      row.push_back(v);
    }
    table.push_back(std::move(row));
  }
  if (opt.json) {
    nlohmann::json j;
    j["max_m"] = opt.max_m;
    j["table"] = table;
    j["kronecker"] = kronecker;
    std::cout << j.dump() << "\n";
  } else {
    std::printf("m\\q");
    for (int q = 0; q <= opt.max_m; ++q) {
      std::printf("%3d", q);
    }
    std::printf("\n");
    for (int m = 0; m <= opt.max_m; ++m) {
      std::printf("%3d", m);
      for (std::int64_t v : table[m]) {
        std::printf("%3lld", static_cast<long long>(v));
      }
      std::printf("\n");
    }
    std::printf("table %s delta(q,m) for m <= %d\n",
                kronecker ? "matches" : "DOES NOT match", opt.max_m);
  }
  return kronecker ? kExitPass : kExitCheckFailed;
}

struct RiskOptions {
  std::string portfolio_path;
  std::string target_text;
  double tol = 1e-8;
  bool json = false;
};

int run_risk(const RiskOptions& opt) {
  const Portfolio portfolio =
      portfolio_from_json(load_json_file(opt.portfolio_path));
  const AllocationReport alloc = allocation_report(portfolio);
  bool pass = alloc.check_sum_gap <= opt.tol * (1.0 + alloc.capital);

  bool have_identity = false;
  QuadraticIdentityReport identity;
  if (!opt.target_text.empty()) {
    const std::vector<double> target = parse_vector(opt.target_text);
    identity = capital_quadratic_identity(portfolio, target);
    have_identity = true;
    pass = pass && identity.gap <= opt.tol * (1.0 + identity.rhs);
  }

  if (opt.json) {
    nlohmann::json j = to_json(alloc);
    if (have_identity) {
      j["identity"] = to_json(identity);
    }
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "capital       : " << fmt(alloc.capital) << "\n";
    std::cout << "allocations   :\n";
    for (std::size_t i = 0; i < alloc.allocations.size(); ++i) {
      const std::string label = i < portfolio.labels.size()
                                    ? portfolio.labels[i]
                                    : "risk_" + std::to_string(i + 1);
      std::cout << "  " << label << " : " << fmt(alloc.allocations[i]) << "\n";
    }
    std::cout << "check_sum_gap : " << fmt(alloc.check_sum_gap) << "\n";
    if (have_identity) {
      std::cout << "identity      : lhs=" << fmt(identity.lhs)
                << " rhs=" << fmt(identity.rhs) << " gap=" << fmt(identity.gap)
                << "\n";
    }
    std::cout << "result        : " << (pass ? "PASS" : "FAIL") << "\n";
  }
  return pass ? kExitPass : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Collapsed Taylor identities for homogeneous functions"};
  app.require_subcommand(1);

  TaylorOptions taylor_opt;
  CLI::App* taylor_cmd = app.add_subcommand(
      "taylor", "Compare the standard and collapsed Taylor polynomials");
  taylor_cmd->add_option("--family", taylor_opt.family,
                         "euclidean|quadratic_root|monomial|pnorm");
  taylor_cmd->add_option("--alpha", taylor_opt.alpha,
                         "monomial exponents, comma separated");
  taylor_cmd->add_option("--p", taylor_opt.p, "pnorm exponent (> 1)");
  taylor_cmd->add_option("--power", taylor_opt.power,
                         "wrap the family in an integer power");
  taylor_cmd->add_option("--R", taylor_opt.r_text,
                         "matrix rows, e.g. \"1,0.5;0.5,1\"");
  taylor_cmd->add_option("--spec", taylor_opt.spec_path,
                         "function spec JSON file");
  taylor_cmd->add_option("--a", taylor_opt.a_text, "expansion point")
      ->required();
  taylor_cmd->add_option("--b", taylor_opt.b_text, "evaluation point")
      ->required();
  taylor_cmd->add_option("--order", taylor_opt.order, "Taylor order m")
      ->required();
  taylor_cmd->add_option("--tol", taylor_opt.tol, "identity gap tolerance");
  taylor_cmd->add_flag("--json", taylor_opt.json, "machine-readable output");

  VerifyOptions verify_opt;
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "Run the seeded verification suites");
  verify_cmd->add_option(
      "--suite", verify_opt.suite,
      "all|central|corollary|euler|homogeneity|fd|exactness|binomial");
  verify_cmd->add_option("--trials", verify_opt.trials, "trials per case");
  verify_cmd->add_option("--seed", verify_opt.seed, "base seed");
  verify_cmd->add_option("--max-m", verify_opt.max_m,
                         "binomial suite order bound");
  verify_cmd->add_flag("--json", verify_opt.json, "machine-readable output");

  IdentityOptions identity_opt;
  CLI::App* identity_cmd = app.add_subcommand(
      "identity", "Print the alternating binomial sum table");
  identity_cmd->add_option("--max-m", identity_opt.max_m, "largest order");
  identity_cmd->add_flag("--json", identity_opt.json,
                         "machine-readable output");

  RiskOptions risk_opt;
  CLI::App* risk_cmd = app.add_subcommand(
      "risk", "Aggregate a portfolio and allocate capital");
  risk_cmd->add_option("--portfolio", risk_opt.portfolio_path,
                       "portfolio JSON file")
      ->required();
  risk_cmd->add_option("--target", risk_opt.target_text,
                       "target exposures for the quadratic identity");
  risk_cmd->add_option("--tol", risk_opt.tol, "gap tolerance");
  risk_cmd->add_flag("--json", risk_opt.json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitBadConfig;
  }

  try {
    if (taylor_cmd->parsed()) {
      return run_taylor(taylor_opt);
    }
    if (verify_cmd->parsed()) {
      return run_verify(verify_opt);
    }
    if (identity_cmd->parsed()) {
      return run_identity(identity_opt);
    }
    if (risk_cmd->parsed()) {
      return run_risk(risk_opt);
    }
  } catch (const std::domain_error& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  return kExitBadConfig;
}
