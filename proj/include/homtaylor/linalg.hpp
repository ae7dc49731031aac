#pragma once

#include <span>
#include <vector>

namespace homtaylor {

using Matrix = std::vector<std::vector<double>>;

bool is_square(const Matrix& m);
bool is_symmetric(const Matrix& m, double tol);

/// Strict positive definiteness via an unpivoted Cholesky factorization:
/// PD iff every pivot stays positive.
bool is_positive_definite(const Matrix& m);

std::vector<double> matvec(const Matrix& m, std::span<const double> x);
double quadratic_form(const Matrix& m, std::span<const double> x);

Matrix identity_matrix(int n);

}  // namespace homtaylor
