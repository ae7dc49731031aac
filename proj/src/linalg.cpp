#include "homtaylor/linalg.hpp"

#include <cmath>
#include <stdexcept>

namespace homtaylor {

bool is_square(const Matrix& m) {
  const std::size_t n = m.size();
  if (n == 0) {
    return false;
  }
  for (const auto& row : m) {
    if (row.size() != n) {
      return false;
    }
  }
  return true;
}

bool is_symmetric(const Matrix& m, double tol) {
  const std::size_t n = m.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (std::abs(m[i][j] - m[j][i]) > tol) {
        return false;
      }
    }
  }
  return true;
}

bool is_positive_definite(const Matrix& m) {
  const std::size_t n = m.size();
  Matrix l(n, std::vector<double>(n, 0.0));
  for (std::size_t j = 0; j < n; ++j) {
    double d = m[j][j];
    for (std::size_t k = 0; k < j; ++k) {
      d -= l[j][k] * l[j][k];
    }
    if (!(d > 0.0)) {
      return false;
    }
    l[j][j] = std::sqrt(d);
    for (std::size_t i = j + 1; i < n; ++i) {
      double s = m[i][j];
      for (std::size_t k = 0; k < j; ++k) {
        s -= l[i][k] * l[j][k];
      }
      l[i][j] = s / l[j][j];
    }
  }
  return true;
}

std::vector<double> matvec(const Matrix& m, std::span<const double> x) {
  const std::size_t n = m.size();
  if (x.size() != n) {
    throw std::invalid_argument("matvec: dimension mismatch");
  }
  std::vector<double> y(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      s += m[i][j] * x[j];
    }
    y[i] = s;
  }
  return y;
}

double quadratic_form(const Matrix& m, std::span<const double> x) {
  const std::size_t n = m.size();
  if (x.size() != n) {
    throw std::invalid_argument("quadratic_form: dimension mismatch");
  }
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      s += m[i][j] * x[i] * x[j];
    }
  }
  return s;
}

Matrix identity_matrix(int n) {
  Matrix m(static_cast<std::size_t>(n),
           std::vector<double>(static_cast<std::size_t>(n), 0.0));
  for (int i = 0; i < n; ++i) {
    m[i][i] = 1.0;
  }
  return m;
}

}  // namespace homtaylor
