#include "homtaylor/riskagg.hpp"

#include <cmath>
#include <stdexcept>

#include "homtaylor/homfun.hpp"
#include "homtaylor/taylor.hpp"

namespace homtaylor {

namespace {

bool all_zero(std::span<const double> x) {
  for (double xi : x) {
    if (xi != 0.0) {
      return false;
    }
  }
  return true;
}

}  // namespace

void validate(const Portfolio& p) {
  if (!is_square(p.matrix)) {
    throw std::invalid_argument("portfolio: R must be square");
  }
  if (p.matrix.size() != p.exposures.size()) {
    throw std::invalid_argument(
        "portfolio: exposures and R dimensions differ");
  }
  if (!p.labels.empty() && p.labels.size() != p.exposures.size()) {
    throw std::invalid_argument("portfolio: one label per exposure");
  }
  if (!is_symmetric(p.matrix, 1e-12)) {
    throw std::invalid_argument("portfolio: R must be symmetric");
  }
  if (!is_positive_definite(p.matrix)) {
    throw std::domain_error(
        "portfolio: R must be strictly positive definite");
  }
}

double aggregate_capital(const Portfolio& p) {
  validate(p);
  if (all_zero(p.exposures)) {
    throw std::domain_error("aggregate_capital: zero exposures (0 not in U)");
  }
  return std::sqrt(quadratic_form(p.matrix, p.exposures));
}

std::vector<double> euler_allocation(const Portfolio& p) {
  const double capital = aggregate_capital(p);
  if (!(capital > 0.0)) {
    throw std::domain_error("euler_allocation: zero capital");
  }
  const std::vector<double> rx = matvec(p.matrix, p.exposures);
  std::vector<double> alloc(p.exposures.size());
  for (std::size_t i = 0; i < alloc.size(); ++i) {
    alloc[i] = p.exposures[i] * rx[i] / capital;
  }
  return alloc;
}

AllocationReport allocation_report(const Portfolio& p) {
  AllocationReport report;
  report.capital = aggregate_capital(p);
  report.allocations = euler_allocation(p);
  double sum = 0.0;
  for (double a : report.allocations) {
    sum += a;
  }
  report.check_sum_gap = std::abs(sum - report.capital);
  return report;
}

QuadraticIdentityReport capital_quadratic_identity(
    const Portfolio& p, std::span<const double> target) {
  validate(p);
  if (target.size() != p.exposures.size()) {
    throw std::invalid_argument(
        "capital_quadratic_identity: target dimension mismatch");
  }
  if (all_zero(p.exposures) || all_zero(target)) {
    throw std::domain_error(
        "capital_quadratic_identity: endpoints must be nonzero");
  }
  const FunctionPtr f = make_quadratic_root(p.matrix);
  if (!segment_in_domain(*f, p.exposures, target)) {
    throw std::domain_error(
        "capital_quadratic_identity: segment passes through 0");
  }
  QuadraticIdentityReport report;
  report.lhs = taylor_power_collapsed(*f, p.exposures, target, 2);
  report.rhs = quadratic_form(p.matrix, target);
  report.gap = std::abs(report.lhs - report.rhs);
  return report;
}

}  // namespace homtaylor
