#pragma once

#include <complex>
#include <cstddef>
#include <memory>
#include <mutex>
#include <span>
#include <vector>

#include "distfrac/fft.hpp"

namespace distfrac {

/// Symmetric Toeplitz operator defined by its first column. Products run
/// through a power-of-two circulant embedding of size >= 2·dim, with the
/// embedded-symbol DFT cached at construction. matvec uses thread-local
/// workspace, so concurrent products on one operator are safe.
class SymToeplitz {
 public:
  explicit SymToeplitz(std::vector<double> first_col);

  std::size_t dim() const { return first_col_.size(); }
  const std::vector<double>& first_col() const { return first_col_; }
  std::size_t embedding_size() const { return padded_; }

  void matvec(std::span<const double> v, std::span<double> out) const;
  std::vector<double> matvec(std::span<const double> v) const;

 private:
  std::vector<double> first_col_;
  std::size_t padded_ = 0;
  fft::ComplexBuffer symbol_dft_;  // half spectrum of the embedded symbol
};

/// Circulant operator with its DFT eigenvalues cached. Products and solves
/// are diagonal in the DFT basis; both are carried out as folded circular
/// convolutions at the power-of-two embedding size, with the product kernel
/// built eagerly and the inverse kernel on first use.
class CirculantOp {
 public:
  explicit CirculantOp(std::vector<double> first_col);

  std::size_t dim() const { return first_col_.size(); }
  const std::vector<double>& first_col() const { return first_col_; }
  const std::vector<std::complex<double>>& eigenvalues() const {
    return eigenvalues_;
  }

  void matvec(std::span<const double> v, std::span<double> out) const;
  std::vector<double> matvec(std::span<const double> v) const;

  /// Applies the inverse. Throws singular_operator_error when an eigenvalue
  /// falls below 1e-14 · max |eigenvalue|.
  void solve(std::span<const double> b, std::span<double> out) const;
  std::vector<double> solve(std::span<const double> b) const;

 private:
  struct SolveKernel {
    std::once_flag once;
    bool singular = false;
    fft::ComplexBuffer kernel_dft;
  };

  void apply_kernel(const fft::ComplexBuffer& kernel_dft,
                    std::span<const double> v, std::span<double> out) const;

  std::vector<double> first_col_;
  std::vector<std::complex<double>> eigenvalues_;
  std::size_t padded_ = 0;
  fft::ComplexBuffer mul_kernel_dft_;
  std::shared_ptr<SolveKernel> solve_kernel_;
};

/// Head of the symbol copied up to the wrap point, tail wrapped (Strang).
CirculantOp strang_circulant(const SymToeplitz& t);

/// Frobenius-norm optimal circulant: first column averages the symbol with
/// its wrap, ((n-k)·g_k + k·g_{n-k})/n. This is the standard optimal
/// (T. Chan) construction for a symmetric Toeplitz matrix.
CirculantOp tchan_circulant(const SymToeplitz& t);

/// All-entries circulant (R. Chan): g_0 on the diagonal, g_k + g_{n-k}
/// elsewhere.
CirculantOp rchan_circulant(const SymToeplitz& t);

/// Circulant representing shift·I + scale·c, the assembled one-level
/// preconditioner.
CirculantOp shifted_circulant(double shift, double scale, const CirculantOp& c);

}  // namespace distfrac
