#include "distfrac/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace distfrac {

namespace {

double off_diagonal_norm(const DenseMatrix& a) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.rows; ++i) {
    for (std::size_t j = i + 1; j < a.cols; ++j) {
      acc += 2.0 * a(i, j) * a(i, j);
    }
  }
  return std::sqrt(acc);
}

double frobenius_norm(const DenseMatrix& a) {
  double acc = 0.0;
  for (double v : a.data) acc += v * v;
  return std::sqrt(acc);
}

}  // namespace

std::vector<double> spectrum(const DenseMatrix& input) {
  if (input.rows != input.cols) {
    throw std::invalid_argument("spectrum: matrix must be square");
  }
  const std::size_t n = input.rows;
  DenseMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      a(i, j) = 0.5 * (input(i, j) + input(j, i));
    }
  }

  const double tol = 1e-12 * std::max(1.0, frobenius_norm(a));
  constexpr int kMaxSweeps = 60;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (off_diagonal_norm(a) < tol) {
      std::vector<double> values(n);
      for (std::size_t i = 0; i < n; ++i) values[i] = a(i, i);
      std::sort(values.begin(), values.end());
      return values;
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a(p, k);
          const double aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
      }
    }
  }
  throw std::runtime_error("spectrum: Jacobi sweeps did not converge");
}

std::vector<double> precond_spectrum(const DenseMatrix& a,
                                     const DenseMatrix& p) {
  if (a.rows != a.cols || p.rows != p.cols || a.rows != p.rows) {
    throw std::invalid_argument("precond_spectrum: dimension mismatch");
  }
  const std::size_t n = a.rows;
  const CholeskyFactor factor(p);

  // W = L⁻¹ A, column by column.
  DenseMatrix w(n, n);
  std::vector<double> column(n);
  std::vector<double> solved(n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) column[i] = a(i, j);
    factor.forward_solve(column, solved);
    for (std::size_t i = 0; i < n; ++i) w(i, j) = solved[i];
  }
  // Bᵀ = L⁻¹ Wᵀ; B is symmetric so its transpose has the same spectrum.
  DenseMatrix bt(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) column[i] = w(j, i);
    factor.forward_solve(column, solved);
    for (std::size_t i = 0; i < n; ++i) bt(i, j) = solved[i];
  }
  return spectrum(bt);
}

}  // namespace distfrac
