#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "distfrac/dense.hpp"
#include "distfrac/toeplitz.hpp"

namespace distfrac {

/// 1D system operator shift·I + scale·G with G the stencil Toeplitz matrix.
struct ShiftedToeplitz1D {
  double shift = 0.0;
  double scale = 0.0;
  SymToeplitz toeplitz;

  std::size_t dim() const { return toeplitz.dim(); }
  void apply(std::span<const double> v, std::span<double> out) const;
  std::vector<double> apply(std::span<const double> v) const;
};

/// 2D Kronecker-sum operator shift·I + scale_x·(I⊗Gx) + scale_y·(Gy⊗I)
/// acting on interior fields vectorized x-fastest.
struct KronSum2D {
  double shift = 0.0;
  double scale_x = 0.0;
  double scale_y = 0.0;
  SymToeplitz gx;
  SymToeplitz gy;

  std::size_t dim() const { return gx.dim() * gy.dim(); }
  void apply(std::span<const double> v, std::span<double> out) const;
  std::vector<double> apply(std::span<const double> v) const;
};

/// Block-circulant preconditioner for KronSum2D, diagonal in the 2D DFT
/// basis: grid eigenvalue (i, j) is shift + scale_x·ex[i] + scale_y·ey[j].
class BccbPrecond {
 public:
  BccbPrecond(double shift, double scale_x, double scale_y, CirculantOp cx,
              CirculantOp cy);

  std::size_t dim() const { return cx_.dim() * cy_.dim(); }
  double shift() const { return shift_; }
  double scale_x() const { return scale_x_; }
  double scale_y() const { return scale_y_; }
  const CirculantOp& cx() const { return cx_; }
  const CirculantOp& cy() const { return cy_; }
  /// Real grid eigenvalues, x index fastest.
  const std::vector<double>& eigen_grid() const { return eigen_grid_; }

  void matvec(std::span<const double> v, std::span<double> out) const;
  void solve(std::span<const double> b, std::span<double> out) const;
  std::vector<double> solve(std::span<const double> b) const;

 private:
  void transform(std::span<const double> in, std::span<double> out,
                 bool invert) const;

  double shift_;
  double scale_x_;
  double scale_y_;
  CirculantOp cx_;
  CirculantOp cy_;
  std::vector<double> eigen_grid_;
};

DenseMatrix to_dense(const SymToeplitz& t,
                     std::size_t cap = kDefaultDenseCap);
DenseMatrix to_dense(const CirculantOp& c, std::size_t cap = kDefaultDenseCap);
DenseMatrix to_dense(const ShiftedToeplitz1D& a,
                     std::size_t cap = kDefaultDenseCap);
DenseMatrix to_dense(const KronSum2D& m, std::size_t cap = kDefaultDenseCap);
DenseMatrix to_dense(const BccbPrecond& p, std::size_t cap = kDefaultDenseCap);

}  // namespace distfrac
