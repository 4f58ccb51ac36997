#include "distfrac/dense.hpp"

#include <cmath>
#include <stdexcept>

#include "distfrac/errors.hpp"

namespace distfrac {

std::vector<double> dense_matvec(const DenseMatrix& a,
                                 std::span<const double> v) {
  if (v.size() != a.cols) {
    throw std::invalid_argument("dense_matvec: dimension mismatch");
  }
  std::vector<double> out(a.rows, 0.0);
  for (std::size_t i = 0; i < a.rows; ++i) {
    double acc = 0.0;
    const double* row = a.data.data() + i * a.cols;
    for (std::size_t j = 0; j < a.cols; ++j) acc += row[j] * v[j];
    out[i] = acc;
  }
  return out;
}

CholeskyFactor::CholeskyFactor(const DenseMatrix& a) {
  if (a.rows != a.cols) {
    throw std::invalid_argument("CholeskyFactor: matrix must be square");
  }
  const std::size_t n = a.rows;
  lower_ = DenseMatrix(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    double diag = a(j, j);
    for (std::size_t k = 0; k < j; ++k) diag -= lower_(j, k) * lower_(j, k);
    if (!(diag > 0.0)) {
      throw not_spd_error(
          "CholeskyFactor: non-positive pivot, matrix is not SPD");
    }
    const double root = std::sqrt(diag);
    lower_(j, j) = root;
    for (std::size_t i = j + 1; i < n; ++i) {
      double acc = a(i, j);
      const double* li = lower_.data.data() + i * n;
      const double* lj = lower_.data.data() + j * n;
      for (std::size_t k = 0; k < j; ++k) acc -= li[k] * lj[k];
      lower_(i, j) = acc / root;
    }
  }
}

void CholeskyFactor::forward_solve(std::span<const double> b,
                                   std::span<double> y) const {
  const std::size_t n = dim();
  if (b.size() != n || y.size() != n) {
    throw std::invalid_argument("CholeskyFactor: dimension mismatch");
  }
  for (std::size_t i = 0; i < n; ++i) {
    double acc = b[i];
    const double* row = lower_.data.data() + i * n;
    for (std::size_t k = 0; k < i; ++k) acc -= row[k] * y[k];
    y[i] = acc / row[i];
  }
}

void CholeskyFactor::backward_solve(std::span<const double> y,
                                    std::span<double> x) const {
  const std::size_t n = dim();
  if (y.size() != n || x.size() != n) {
    throw std::invalid_argument("CholeskyFactor: dimension mismatch");
  }
  for (std::size_t ii = n; ii-- > 0;) {
    double acc = y[ii];
    for (std::size_t k = ii + 1; k < n; ++k) acc -= lower_(k, ii) * x[k];
    x[ii] = acc / lower_(ii, ii);
  }
}

void CholeskyFactor::solve(std::span<const double> b,
                           std::span<double> x) const {
  std::vector<double> y(dim());
  forward_solve(b, y);
  backward_solve(y, x);
}

std::vector<double> CholeskyFactor::solve(std::span<const double> b) const {
  std::vector<double> x(dim());
  solve(b, x);
  return x;
}

std::vector<double> cholesky_solve(const DenseMatrix& a,
                                   std::span<const double> b) {
  return CholeskyFactor(a).solve(b);
}

}  // namespace distfrac
