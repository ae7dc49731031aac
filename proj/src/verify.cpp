#include "homtaylor/verify.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <stdexcept>

#include "homtaylor/combinatorics.hpp"
#include "homtaylor/fd.hpp"
#include "homtaylor/symtensor.hpp"
#include "homtaylor/taylor.hpp"

namespace homtaylor::verify {

namespace {

constexpr double kCentralTol = 1e-8;
constexpr double kEulerTol = 1e-9;
constexpr double kHomogeneityTol = 1e-10;
constexpr double kFdTol = 1e-4;
constexpr double kExactnessTol = 1e-10;

constexpr double kEndpointFloor = 0.5;  // min euclidean norm of a, b
constexpr double kSegmentFloor = 0.3;   // min norm along the sampled segment

std::string format_vector(std::span<const double> v) {
  std::string s = "[";
  char buf[32];
  for (std::size_t i = 0; i < v.size(); ++i) {
    std::snprintf(buf, sizeof(buf), "%.17g", v[i]);
    if (i) {
      s += ",";
    }
    s += buf;
  }
  s += "]";
  return s;
}

double norm2(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) {
    s += x * x;
  }
  return std::sqrt(s);
}

struct TrialOutcome {
  double residual = 0.0;
  std::string description;
};

/// Runs `count` independent trials (OpenMP-parallel, deterministically
/// seeded per trial) and reduces to the max residual in trial order.
SuiteResult run_trials(std::string suite, int count, double tolerance,
                       const std::function<TrialOutcome(int)>& body) {
  std::vector<TrialOutcome> outcomes(static_cast<std::size_t>(count));
  std::vector<std::string> errors(static_cast<std::size_t>(count));
#pragma omp parallel for schedule(dynamic)
  for (int t = 0; t < count; ++t) {
    try {
      outcomes[t] = body(t);
    } catch (const std::exception& e) {
      errors[t] = e.what();
    }
  }
  for (int t = 0; t < count; ++t) {
    if (!errors[t].empty()) {
      throw std::runtime_error(suite + " trial " + std::to_string(t) + ": " +
                               errors[t]);
    }
  }
  SuiteResult result;
  result.suite = std::move(suite);
  result.cases = count;
  result.tolerance = tolerance;
  for (int t = 0; t < count; ++t) {
    if (t == 0 || outcomes[t].residual > result.max_residual) {
      result.max_residual = outcomes[t].residual;
      result.worst_case = outcomes[t].description;
    }
  }
  result.pass = result.max_residual <= tolerance;
  return result;
}

struct IdentityCase {
  std::string name;
  FunctionPtr fn;
  int order;
  SampleRule rule;
  TaylorMode mode;
};

/// Integer-degree catalog entries at their own degree, plus the power cases:
/// three random PD quadratic roots (n = 2, 3, 5) squared and pnorm powers
/// m = 2..4 (m = 1 is the catalog pnorm itself).
std::vector<IdentityCase> central_cases(std::uint64_t seed) {
  std::vector<IdentityCase> cases;
  for (const auto& entry : catalog()) {
    const int m = static_cast<int>(std::lround(entry.fn->degree()));
    cases.push_back({entry.name, entry.fn, m, rule_for_family(entry.family),
                     TaylorMode::theorem});
  }
  Rng matrix_rng(mix_seed(seed, 0x9d)) ;
  for (int n : {2, 3, 5}) {
    auto qr = make_quadratic_root(random_pd_matrix(n, matrix_rng));
    cases.push_back({"rand_" + qr->name() + "^2", make_power(qr, 2), 2,
                     SampleRule::origin_avoiding, TaylorMode::theorem});
  }
  auto pnorm = make_pnorm(2, 3.0);
  for (int m = 2; m <= 4; ++m) {
    cases.push_back({"pnorm(p=3,n=2)^" + std::to_string(m),
                     make_power(pnorm, m), m, SampleRule::positive_box,
                     TaylorMode::theorem});
  }
  return cases;
}

double identity_residual(const TaylorReport& r) {
  return r.identity_gap / (1.0 + std::abs(r.f_a) + std::abs(r.f_b));
}

SuiteResult merge(std::string suite, std::vector<SuiteResult> parts) {
  SuiteResult total;
  total.suite = std::move(suite);
  bool first = true;
  for (auto& part : parts) {
    total.cases += part.cases;
    total.tolerance = part.tolerance;
    if (first || part.max_residual > total.max_residual) {
      total.max_residual = part.max_residual;
      total.worst_case = std::move(part.worst_case);
      first = false;
    }
  }
  total.pass = total.max_residual <= total.tolerance;
  return total;
}

}  // namespace

std::uint64_t mix_seed(std::uint64_t base, std::uint64_t index) {
  std::uint64_t z = base + 0x9E3779B97F4A7C15ull * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

Matrix random_pd_matrix(int n, Rng& rng) {
  Matrix m(static_cast<std::size_t>(n),
           std::vector<double>(static_cast<std::size_t>(n), 0.0));
  for (auto& row : m) {
    for (double& v : row) {
      v = rng.uniform(-1.0, 1.0);
    }
  }
  Matrix r(static_cast<std::size_t>(n),
           std::vector<double>(static_cast<std::size_t>(n), 0.0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      double s = 0.0;
      for (int k = 0; k < n; ++k) {
        s += m[k][i] * m[k][j];
      }
      r[i][j] = s + (i == j ? 1e-3 : 0.0);
    }
  }
  return r;
}

SampleRule rule_for_family(const std::string& family) {
  if (family == "pnorm" || family == "monomial") {
    return SampleRule::positive_box;
  }
  return SampleRule::origin_avoiding;
}

std::vector<double> sample_point(int dim, SampleRule rule, Rng& rng) {
  std::vector<double> x(static_cast<std::size_t>(dim));
  if (rule == SampleRule::positive_box) {
    for (double& v : x) {
      v = rng.uniform(0.5, 2.0);
    }
    return x;
  }
  for (int attempt = 0; attempt < 100000; ++attempt) {
    for (double& v : x) {
      v = rng.uniform(-2.0, 2.0);
    }
    if (norm2(x) >= kEndpointFloor) {
      return x;
    }
  }
  throw std::runtime_error("sample_point: rejection loop did not terminate");
}

std::pair<std::vector<double>, std::vector<double>> sample_pair(
    const HomogeneousFunction& f, SampleRule rule, Rng& rng) {
  const int n = f.dim();
  if (rule == SampleRule::positive_box) {
    auto a = sample_point(n, rule, rng);
    auto b = sample_point(n, rule, rng);
    return {std::move(a), std::move(b)};
  }
  // Keep the whole segment clear of the origin: rounding noise grows like a
  // power of 1/|a| through the square-root composition, so points very close
  // to the domain boundary are not meaningful identity checks.
  std::vector<double> point(static_cast<std::size_t>(n));
  for (int attempt = 0; attempt < 100000; ++attempt) {
    auto a = sample_point(n, rule, rng);
    auto b = sample_point(n, rule, rng);
    bool clear = true;
    for (int s = 0; s < 101 && clear; ++s) {
      const double t = static_cast<double>(s) / 100.0;
      for (int i = 0; i < n; ++i) {
        point[i] = a[i] + t * (b[i] - a[i]);
      }
      clear = norm2(point) >= kSegmentFloor;
    }
    if (clear && segment_in_domain(f, a, b)) {
      return {std::move(a), std::move(b)};
    }
  }
  throw std::runtime_error("sample_pair: rejection loop did not terminate");
}

SuiteResult central_identity(int trials, std::uint64_t seed) {
  const auto cases = central_cases(seed);
  std::vector<SuiteResult> parts;
  for (std::size_t c = 0; c < cases.size(); ++c) {
    const auto& id_case = cases[c];
    const std::uint64_t case_seed = mix_seed(seed, c);
    parts.push_back(run_trials(
        "central", trials, kCentralTol, [&, case_seed](int t) {
          Rng rng(mix_seed(case_seed, static_cast<std::uint64_t>(t)));
          const auto [a, b] = sample_pair(*id_case.fn, id_case.rule, rng);
          const TaylorReport r =
              build_report(*id_case.fn, a, b, id_case.order, id_case.mode);
          return TrialOutcome{identity_residual(r),
                              id_case.name + " trial " + std::to_string(t) +
                                  " a=" + format_vector(a) +
                                  " b=" + format_vector(b)};
        }));
  }
  return merge("central", std::move(parts));
}

SuiteResult corollary_powers(int trials, std::uint64_t seed) {
  std::vector<SuiteResult> parts;
  std::size_t c = 0;
  for (const auto& entry : catalog()) {
    if (std::abs(entry.fn->degree() - 1.0) > 1e-12) {
      continue;
    }
    const SampleRule rule = rule_for_family(entry.family);
    for (int m = 1; m <= 6; ++m, ++c) {
      const std::uint64_t case_seed = mix_seed(seed, 1000 + c);
      parts.push_back(run_trials(
          "corollary", trials, kCentralTol, [&, rule, m, case_seed](int t) {
            Rng rng(mix_seed(case_seed, static_cast<std::uint64_t>(t)));
            const auto [a, b] = sample_pair(*entry.fn, rule, rng);
            const TaylorReport r =
                build_report(*entry.fn, a, b, m, TaylorMode::corollary);
            return TrialOutcome{identity_residual(r),
                                entry.name + "^" + std::to_string(m) +
                                    " trial " + std::to_string(t) +
                                    " a=" + format_vector(a) +
                                    " b=" + format_vector(b)};
          }));
    }
  }
  return merge("corollary", std::move(parts));
}

SuiteResult euler_chain(int points, std::uint64_t seed) {
  std::vector<SuiteResult> parts;
  std::size_t c = 0;
  for (const auto& entry : catalog()) {
    const int m = static_cast<int>(std::lround(entry.fn->degree()));
    const SampleRule rule = rule_for_family(entry.family);
    const std::uint64_t case_seed = mix_seed(seed, 2000 + c++);
    parts.push_back(run_trials(
        "euler", points, kEulerTol, [&, m, rule, case_seed](int t) {
          Rng rng(mix_seed(case_seed, static_cast<std::uint64_t>(t)));
          const auto x = sample_point(entry.fn->dim(), rule, rng);
          TrialOutcome out;
          for (int k = 1; k <= m; ++k) {
            const double res = euler_chain_residual(*entry.fn, x, m, k);
            if (res >= out.residual) {
              out.residual = res;
              out.description = entry.name + " k=" + std::to_string(k) +
                                " trial " + std::to_string(t) +
                                " x=" + format_vector(x);
            }
          }
          return out;
        }));
  }
  return merge("euler", std::move(parts));
}

SuiteResult homogeneity(int pairs, std::uint64_t seed) {
  std::vector<SuiteResult> parts;
  std::size_t c = 0;
  for (const auto& entry : catalog()) {
    const SampleRule rule = rule_for_family(entry.family);
    const std::uint64_t case_seed = mix_seed(seed, 3000 + c++);
    parts.push_back(run_trials(
        "homogeneity", pairs, kHomogeneityTol, [&, rule, case_seed](int t) {
          Rng rng(mix_seed(case_seed, static_cast<std::uint64_t>(t)));
          const auto x = sample_point(entry.fn->dim(), rule, rng);
          const double lambda = rng.uniform(0.05, 4.0);
          const double res = homogeneity_residual(*entry.fn, x, lambda);
          const double scale = 1.0 + std::abs((*entry.fn)(x));
          char buf[32];
          std::snprintf(buf, sizeof(buf), "%.17g", lambda);
          return TrialOutcome{res / scale, entry.name + " trial " +
                                               std::to_string(t) +
                                               " x=" + format_vector(x) +
                                               " lambda=" + buf};
        }));
  }
  return merge("homogeneity", std::move(parts));
}

SuiteResult fd_crosscheck(int points, std::uint64_t seed) {
  std::vector<SuiteResult> parts;
  std::size_t c = 0;
  for (const auto& entry : catalog()) {
    if (entry.fn->dim() > 3) {
      continue;
    }
    const SampleRule rule = rule_for_family(entry.family);
    const std::uint64_t case_seed = mix_seed(seed, 4000 + c++);
    parts.push_back(run_trials(
        "fd", points, kFdTol, [&, rule, case_seed](int t) {
          Rng rng(mix_seed(case_seed, static_cast<std::uint64_t>(t)));
          const auto x = sample_point(entry.fn->dim(), rule, rng);
          const Jet jet = entry.fn->eval_jet(x, 3);
          TrialOutcome out;
          for (int k = 1; k <= 3; ++k) {
            const SymmetricTensor exact = extract_tensor(jet, k);
            const SymmetricTensor approx = fd_tensor(*entry.fn, x, k);
            const TensorCloseResult close = tensor_close(exact, approx, kFdTol);
            double max_abs = 0.0;
            for (double v : exact.coeffs()) {
              max_abs = std::max(max_abs, std::abs(v));
            }
            for (double v : approx.coeffs()) {
              max_abs = std::max(max_abs, std::abs(v));
            }
            const double res = close.max_residual / (1.0 + max_abs);
            if (res >= out.residual) {
              out.residual = res;
              out.description = entry.name + " k=" + std::to_string(k) +
                                " trial " + std::to_string(t) +
                                " x=" + format_vector(x);
            }
          }
          return out;
        }));
  }
  return merge("fd", std::move(parts));
}

SuiteResult binomial_identity(int max_m) {
  if (max_m < 0 || max_m > kMaxBinomialOrder) {
    throw std::invalid_argument("binomial_identity: max_m must be in [0, 20]");
  }
  SuiteResult result;
  result.suite = "binomial";
  result.tolerance = 0.0;
  for (int m = 0; m <= max_m; ++m) {
    for (int q = 0; q <= m; ++q) {
      ++result.cases;
      const std::int64_t value = alternating_binomial_sum(m, q);
      const std::int64_t expected = (q == m) ? 1 : 0;
      const double res = static_cast<double>(std::llabs(value - expected));
      if (res > result.max_residual || result.worst_case.empty()) {
        result.max_residual = res;
        result.worst_case =
            "m=" + std::to_string(m) + " q=" + std::to_string(q);
      }
    }
  }
  result.pass = result.max_residual <= result.tolerance;
  return result;
}

SuiteResult polynomial_exactness(int trials, std::uint64_t seed) {
  std::vector<SuiteResult> parts;
  std::size_t c = 0;
  for (const auto& entry : catalog()) {
    if (entry.family != "monomial") {
      continue;
    }
    const int m = static_cast<int>(std::lround(entry.fn->degree()));
    const std::uint64_t case_seed = mix_seed(seed, 5000 + c++);
    parts.push_back(run_trials(
        "exactness", trials, kExactnessTol, [&, m, case_seed](int t) {
          Rng rng(mix_seed(case_seed, static_cast<std::uint64_t>(t)));
          const auto [a, b] =
              sample_pair(*entry.fn, SampleRule::positive_box, rng);
          const double fb = (*entry.fn)(b);
          const double remainder =
              fb - taylor_standard(*entry.fn, a, b, m);
          return TrialOutcome{std::abs(remainder) / (1.0 + std::abs(fb)),
                              entry.name + " trial " + std::to_string(t) +
                                  " a=" + format_vector(a) +
                                  " b=" + format_vector(b)};
        }));
  }
  return merge("exactness", std::move(parts));
}

std::vector<SuiteResult> run_suites(const std::string& which, int trials,
                                    std::uint64_t seed, int max_m) {
  if (trials < 1) {
    throw std::invalid_argument("run_suites: trials must be >= 1");
  }
  const bool all = which == "all";
  std::vector<SuiteResult> results;
  if (all || which == "central") {
    results.push_back(central_identity(trials, seed));
  }
  if (all || which == "corollary") {
    results.push_back(corollary_powers(trials, seed));
  }
  if (all || which == "euler") {
    results.push_back(euler_chain(20, seed));
  }
  if (all || which == "homogeneity") {
    results.push_back(homogeneity(50, seed));
  }
  if (all || which == "fd") {
    results.push_back(fd_crosscheck(20, seed));
  }
  if (all || which == "exactness") {
    results.push_back(polynomial_exactness(trials, seed));
  }
  if (all || which == "binomial") {
    results.push_back(binomial_identity(max_m));
  }
  if (results.empty()) {
    throw std::invalid_argument("unknown suite: " + which);
  }
  return results;
}

}  // namespace homtaylor::verify
