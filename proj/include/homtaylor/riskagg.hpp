#pragma once

#include <span>
#include <string>
#include <vector>

#include "homtaylor/linalg.hpp"

namespace homtaylor {

/// Standard-formula aggregation portfolio: exposures x (currency units) and
/// a symmetric, strictly positive definite correlation-like matrix R.
struct Portfolio {
  std::vector<double> exposures;
  Matrix matrix;
  std::vector<std::string> labels;  // optional; empty or one per exposure
};

/// Throws std::invalid_argument on shape/symmetry violations and
/// std::domain_error when R is not strictly positive definite.
void validate(const Portfolio& p);

/// sqrt(x^T R x). Throws std::domain_error for x = 0.
double aggregate_capital(const Portfolio& p);

/// Euler allocation alloc_i = x_i (Rx)_i / sqrt(x^T R x); the components sum
/// to the aggregate capital by the degree-1 chain identity.
std::vector<double> euler_allocation(const Portfolio& p);

struct AllocationReport {
  double capital = 0.0;
  std::vector<double> allocations;
  double check_sum_gap = 0.0;  // |sum(allocations) - capital|
};

AllocationReport allocation_report(const Portfolio& p);

struct QuadraticIdentityReport {
  double lhs = 0.0;  // collapsed order-2 Taylor of f^2 at the exposures
  double rhs = 0.0;  // b^T R b
  double gap = 0.0;
};

/// The exact order-2 case: (1/2) d^2 f^2(a; b) = b^T R b for
/// f = sqrt(x^T R x), a = exposures, b = target. Requires both endpoints
/// nonzero and the connecting segment to avoid 0.
QuadraticIdentityReport capital_quadratic_identity(
    const Portfolio& p, std::span<const double> target);

}  // namespace homtaylor
