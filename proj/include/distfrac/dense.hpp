#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace distfrac {

inline constexpr std::size_t kDefaultDenseCap = 4096;

/// Row-major dense matrix, used for reference solves and diagnostics only.
struct DenseMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> data;

  DenseMatrix() = default;
  DenseMatrix(std::size_t r, std::size_t c)
      : rows(r), cols(c), data(r * c, 0.0) {}

  double& operator()(std::size_t i, std::size_t j) {
    return data[i * cols + j];
  }
  double operator()(std::size_t i, std::size_t j) const {
    return data[i * cols + j];
  }
};

std::vector<double> dense_matvec(const DenseMatrix& a,
                                 std::span<const double> v);

/// Lower-triangular Cholesky factor of an SPD matrix. Throws not_spd_error
/// when a pivot is not strictly positive.
class CholeskyFactor {
 public:
  explicit CholeskyFactor(const DenseMatrix& a);

  std::size_t dim() const { return lower_.rows; }
  const DenseMatrix& lower() const { return lower_; }

  /// L y = b.
  void forward_solve(std::span<const double> b, std::span<double> y) const;
  /// Lᵀ x = y.
  void backward_solve(std::span<const double> y, std::span<double> x) const;
  /// A x = b via the two triangular solves.
  void solve(std::span<const double> b, std::span<double> x) const;
  std::vector<double> solve(std::span<const double> b) const;

 private:
  DenseMatrix lower_;
};

std::vector<double> cholesky_solve(const DenseMatrix& a,
                                   std::span<const double> b);

}  // namespace distfrac
