#include "distfrac/toeplitz.hpp"

#include <cmath>
#include <stdexcept>

#include "distfrac/errors.hpp"

namespace distfrac {

SymToeplitz::SymToeplitz(std::vector<double> first_col)
    : first_col_(std::move(first_col)) {
  if (first_col_.empty()) {
    throw std::invalid_argument("SymToeplitz: empty first column");
  }
  const std::size_t n = first_col_.size();
  padded_ = fft::next_pow2(2 * n);
  fft::RealBuffer embedded(padded_, 0.0);
  embedded[0] = first_col_[0];
  for (std::size_t k = 1; k < n; ++k) {
    embedded[k] = first_col_[k];
    embedded[padded_ - k] = first_col_[k];
  }
  symbol_dft_.resize(padded_ / 2 + 1);
  fft::forward_real(embedded, symbol_dft_);
}

void SymToeplitz::matvec(std::span<const double> v,
                         std::span<double> out) const {
  const std::size_t n = dim();
  if (v.size() != n || out.size() != n) {
    throw std::invalid_argument("SymToeplitz::matvec: dimension mismatch");
  }
  thread_local fft::RealBuffer work;
  thread_local fft::ComplexBuffer hat;
  work.resize(padded_);
  hat.resize(padded_ / 2 + 1);
  for (std::size_t i = 0; i < n; ++i) work[i] = v[i];
  std::fill(work.begin() + static_cast<std::ptrdiff_t>(n), work.end(), 0.0);
  fft::forward_real(work, hat);
  for (std::size_t i = 0; i < hat.size(); ++i) hat[i] *= symbol_dft_[i];
  fft::inverse_real(hat, work);
  for (std::size_t i = 0; i < n; ++i) out[i] = work[i];
}

std::vector<double> SymToeplitz::matvec(std::span<const double> v) const {
  std::vector<double> out(dim());
  matvec(v, out);
  return out;
}

CirculantOp::CirculantOp(std::vector<double> first_col)
    : first_col_(std::move(first_col)),
      solve_kernel_(std::make_shared<SolveKernel>()) {
  if (first_col_.empty()) {
    throw std::invalid_argument("CirculantOp: empty first column");
  }
  const std::size_t n = first_col_.size();
  fft::ComplexBuffer column(n);
  for (std::size_t i = 0; i < n; ++i) column[i] = first_col_[i];
  eigenvalues_.resize(n);
  fft::forward(column, eigenvalues_);

  // product kernel: the cyclic convolution folds out of a linear one at the
  // power-of-two size, c[k] = lin[k] + lin[k + n]
  padded_ = fft::next_pow2(2 * n);
  fft::RealBuffer kernel(padded_, 0.0);
  for (std::size_t i = 0; i < n; ++i) kernel[i] = first_col_[i];
  mul_kernel_dft_.resize(padded_ / 2 + 1);
  fft::forward_real(kernel, mul_kernel_dft_);
}

void CirculantOp::apply_kernel(const fft::ComplexBuffer& kernel_dft,
                               std::span<const double> v,
                               std::span<double> out) const {
  const std::size_t n = dim();
  thread_local fft::RealBuffer work;
  thread_local fft::ComplexBuffer hat;
  work.resize(padded_);
  hat.resize(padded_ / 2 + 1);
  for (std::size_t i = 0; i < n; ++i) work[i] = v[i];
  std::fill(work.begin() + static_cast<std::ptrdiff_t>(n), work.end(), 0.0);
  fft::forward_real(work, hat);
  for (std::size_t i = 0; i < hat.size(); ++i) hat[i] *= kernel_dft[i];
  fft::inverse_real(hat, work);
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = work[i] + work[i + n];
  }
}

void CirculantOp::matvec(std::span<const double> v,
                         std::span<double> out) const {
  if (v.size() != dim() || out.size() != dim()) {
    throw std::invalid_argument("CirculantOp::matvec: dimension mismatch");
  }
  apply_kernel(mul_kernel_dft_, v, out);
}

std::vector<double> CirculantOp::matvec(std::span<const double> v) const {
  std::vector<double> out(dim());
  matvec(v, out);
  return out;
}

void CirculantOp::solve(std::span<const double> b,
                        std::span<double> out) const {
  const std::size_t n = dim();
  if (b.size() != n || out.size() != n) {
    throw std::invalid_argument("CirculantOp::solve: dimension mismatch");
  }
  SolveKernel& cache = *solve_kernel_;
  std::call_once(cache.once, [&] {
    double max_mag = 0.0;
    for (const auto& e : eigenvalues_) {
      max_mag = std::max(max_mag, std::abs(e));
    }
    const double floor = 1e-14 * max_mag;
    fft::ComplexBuffer inverted(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (std::abs(eigenvalues_[i]) < floor) {
        cache.singular = true;
        return;
      }
      inverted[i] = 1.0 / eigenvalues_[i];
    }
    // first column of the inverse, then its padded product kernel
    fft::ComplexBuffer inverse_col(n);
    fft::inverse(inverted, inverse_col);
    fft::RealBuffer kernel(padded_, 0.0);
    for (std::size_t i = 0; i < n; ++i) kernel[i] = inverse_col[i].real();
    cache.kernel_dft.resize(padded_ / 2 + 1);
    fft::forward_real(kernel, cache.kernel_dft);
  });
  if (cache.singular) {
    throw singular_operator_error(
        "CirculantOp::solve: singular preconditioner (near-zero eigenvalue)");
  }
  apply_kernel(cache.kernel_dft, b, out);
}

std::vector<double> CirculantOp::solve(std::span<const double> b) const {
  std::vector<double> out(dim());
  solve(b, out);
  return out;
}

CirculantOp strang_circulant(const SymToeplitz& t) {
  const std::size_t n = t.dim();
  if (n < 2) {
    throw std::invalid_argument("strang_circulant: size must be >= 2");
  }
  const auto& g = t.first_col();
  std::vector<double> col(n);
  col[0] = g[0];
  const std::size_t split = n / 2;
  for (std::size_t k = 1; k < n; ++k) {
    col[k] = (k <= split) ? g[k] : g[n - k];
  }
  return CirculantOp(std::move(col));
}

CirculantOp tchan_circulant(const SymToeplitz& t) {
  const std::size_t n = t.dim();
  if (n < 2) {
    throw std::invalid_argument("tchan_circulant: size must be >= 2");
  }
  const auto& g = t.first_col();
  std::vector<double> col(n);
  col[0] = g[0];
  for (std::size_t k = 1; k < n; ++k) {
    col[k] = (static_cast<double>(n - k) * g[k] +
              static_cast<double>(k) * g[n - k]) /
             static_cast<double>(n);
  }
  return CirculantOp(std::move(col));
}

CirculantOp rchan_circulant(const SymToeplitz& t) {
  const std::size_t n = t.dim();
  if (n < 2) {
    throw std::invalid_argument("rchan_circulant: size must be >= 2");
  }
  const auto& g = t.first_col();
  std::vector<double> col(n);
  col[0] = g[0];
  for (std::size_t k = 1; k < n; ++k) {
    col[k] = g[k] + g[n - k];
  }
  return CirculantOp(std::move(col));
}

CirculantOp shifted_circulant(double shift, double scale,
                              const CirculantOp& c) {
  std::vector<double> col = c.first_col();
  for (auto& v : col) v *= scale;
  col[0] += shift;
  return CirculantOp(std::move(col));
}

}  // namespace distfrac
