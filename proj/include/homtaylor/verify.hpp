#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "homtaylor/homfun.hpp"

namespace homtaylor::verify {

/// Deterministic uniform generator: the mt19937_64 stream is fully specified
/// by the standard, and the 53-bit mapping avoids the implementation-defined
/// std::uniform_real_distribution.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform() {  // [0, 1)
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

 private:
  std::mt19937_64 engine_;
};

/// splitmix64-style mixing for per-case / per-trial seed streams.
std::uint64_t mix_seed(std::uint64_t base, std::uint64_t index);

/// M^T M + 1e-3 I with M entries uniform in [-1, 1]; strictly PD by
/// construction.
Matrix random_pd_matrix(int n, Rng& rng);

/// How trial points are drawn for a function family:
/// components uniform in [0.5, 2] for orthant-domain families, uniform in
/// [-2, 2] with a rejection loop keeping the whole segment clear of the
/// origin for the quadratic-root families.
enum class SampleRule { positive_box, origin_avoiding };

SampleRule rule_for_family(const std::string& family);

std::vector<double> sample_point(int dim, SampleRule rule, Rng& rng);
std::pair<std::vector<double>, std::vector<double>> sample_pair(
    const HomogeneousFunction& f, SampleRule rule, Rng& rng);

struct SuiteResult {
  std::string suite;
  int cases = 0;
  double max_residual = 0.0;  // normalized by the per-instance scale
  double tolerance = 0.0;
  bool pass = false;
  std::string worst_case;
};

/// |taylor_standard - taylor_collapsed| / (1 + |f(a)| + |f(b)|) over the
/// integer-degree catalog plus the power cases (random PD quadratic roots
/// squared, pnorm powers up to 4).
SuiteResult central_identity(int trials, std::uint64_t seed);

/// Same bound for f^m, degree-1 catalog functions, m = 1..6.
SuiteResult corollary_powers(int trials, std::uint64_t seed);

/// Relative residual of contract(T_k, a) = (m-k+1) T_{k-1}, k = 1..m.
SuiteResult euler_chain(int points, std::uint64_t seed);

/// |f(lambda x) - lambda^m f(x)| / (1 + |f(x)|), lambda in (0, 4].
SuiteResult homogeneity(int pairs, std::uint64_t seed);

/// Jet-derived tensors against the finite-difference oracle, k <= 3.
SuiteResult fd_crosscheck(int points, std::uint64_t seed);

/// Exact Kronecker pattern of the alternating binomial sums, m <= max_m.
SuiteResult binomial_identity(int max_m);

/// |f(b) - taylor_standard| / (1 + |f(b)|) for the monomial entries.
SuiteResult polynomial_exactness(int trials, std::uint64_t seed);

/// Runs one named suite or all of them ("all"). Throws std::invalid_argument
/// for unknown names or non-positive trial counts.
std::vector<SuiteResult> run_suites(const std::string& which, int trials,
                                    std::uint64_t seed, int max_m);

}  // namespace homtaylor::verify
