#include "distfrac/operators.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

#include "distfrac/errors.hpp"
#include "distfrac/fft.hpp"

namespace distfrac {

namespace {

void check_cap(std::size_t n, std::size_t cap, const char* what) {
  if (n > cap) {
    throw cap_exceeded_error(std::string(what) + ": dimension " +
                             std::to_string(n) + " exceeds dense cap " +
                             std::to_string(cap));
  }
}

}  // namespace

void ShiftedToeplitz1D::apply(std::span<const double> v,
                              std::span<double> out) const {
  if (v.size() != dim() || out.size() != dim()) {
    throw std::invalid_argument("ShiftedToeplitz1D::apply: dimension mismatch");
  }
  toeplitz.matvec(v, out);
  for (std::size_t i = 0; i < v.size(); ++i) {
    out[i] = shift * v[i] + scale * out[i];
  }
}

std::vector<double> ShiftedToeplitz1D::apply(std::span<const double> v) const {
  std::vector<double> out(dim());
  apply(v, out);
  return out;
}

void KronSum2D::apply(std::span<const double> v, std::span<double> out) const {
  const std::size_t nx = gx.dim();
  const std::size_t ny = gy.dim();
  if (v.size() != nx * ny || out.size() != nx * ny) {
    throw std::invalid_argument("KronSum2D::apply: dimension mismatch");
  }
  std::vector<double> line_out(nx);
  for (std::size_t j = 0; j < ny; ++j) {
    const auto row = v.subspan(j * nx, nx);
    gx.matvec(row, line_out);
    for (std::size_t i = 0; i < nx; ++i) {
      out[j * nx + i] = shift * row[i] + scale_x * line_out[i];
    }
  }
  std::vector<double> column(ny);
  std::vector<double> column_out(ny);
  for (std::size_t i = 0; i < nx; ++i) {
    for (std::size_t j = 0; j < ny; ++j) column[j] = v[j * nx + i];
    gy.matvec(column, column_out);
    for (std::size_t j = 0; j < ny; ++j) {
      out[j * nx + i] += scale_y * column_out[j];
    }
  }
}

std::vector<double> KronSum2D::apply(std::span<const double> v) const {
  std::vector<double> out(dim());
  apply(v, out);
  return out;
}

BccbPrecond::BccbPrecond(double shift, double scale_x, double scale_y,
                         CirculantOp cx, CirculantOp cy)
    : shift_(shift),
      scale_x_(scale_x),
      scale_y_(scale_y),
      cx_(std::move(cx)),
      cy_(std::move(cy)) {
  const std::size_t nx = cx_.dim();
  const std::size_t ny = cy_.dim();
  eigen_grid_.resize(nx * ny);
  const auto& ex = cx_.eigenvalues();
  const auto& ey = cy_.eigenvalues();
  for (std::size_t j = 0; j < ny; ++j) {
    for (std::size_t i = 0; i < nx; ++i) {
      eigen_grid_[j * nx + i] =
          shift_ + scale_x_ * ex[i].real() + scale_y_ * ey[j].real();
    }
  }
}

void BccbPrecond::transform(std::span<const double> in, std::span<double> out,
                            bool invert) const {
  const std::size_t nx = cx_.dim();
  const std::size_t ny = cy_.dim();
  if (in.size() != nx * ny || out.size() != nx * ny) {
    throw std::invalid_argument("BccbPrecond: dimension mismatch");
  }
  double max_mag = 0.0;
  if (invert) {
    for (double e : eigen_grid_) max_mag = std::max(max_mag, std::abs(e));
  }
  const double floor = 1e-14 * max_mag;
  thread_local fft::ComplexBuffer work;
  thread_local fft::ComplexBuffer hat;
  work.resize(nx * ny);
  hat.resize(nx * ny);
  for (std::size_t p = 0; p < in.size(); ++p) work[p] = in[p];
  fft::forward_2d(ny, nx, work, hat);
  for (std::size_t p = 0; p < hat.size(); ++p) {
    if (invert) {
      if (std::abs(eigen_grid_[p]) < floor) {
        throw singular_operator_error(
            "BccbPrecond::solve: singular grid eigenvalue");
      }
      hat[p] /= eigen_grid_[p];
    } else {
      hat[p] *= eigen_grid_[p];
    }
  }
  fft::inverse_2d(ny, nx, hat, work);
  for (std::size_t p = 0; p < out.size(); ++p) out[p] = work[p].real();
}

void BccbPrecond::matvec(std::span<const double> v,
                         std::span<double> out) const {
  transform(v, out, false);
}

void BccbPrecond::solve(std::span<const double> b,
                        std::span<double> out) const {
  transform(b, out, true);
}

std::vector<double> BccbPrecond::solve(std::span<const double> b) const {
  std::vector<double> out(dim());
  solve(b, out);
  return out;
}

DenseMatrix to_dense(const SymToeplitz& t, std::size_t cap) {
  const std::size_t n = t.dim();
  check_cap(n, cap, "to_dense(SymToeplitz)");
  DenseMatrix a(n, n);
  const auto& col = t.first_col();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      a(i, j) = col[i >= j ? i - j : j - i];
    }
  }
  return a;
}

DenseMatrix to_dense(const CirculantOp& c, std::size_t cap) {
  const std::size_t n = c.dim();
  check_cap(n, cap, "to_dense(CirculantOp)");
  DenseMatrix a(n, n);
  const auto& col = c.first_col();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      a(i, j) = col[(i + n - j) % n];
    }
  }
  return a;
}

DenseMatrix to_dense(const ShiftedToeplitz1D& op, std::size_t cap) {
  DenseMatrix a = to_dense(op.toeplitz, cap);
  for (auto& v : a.data) v *= op.scale;
  for (std::size_t i = 0; i < a.rows; ++i) a(i, i) += op.shift;
  return a;
}

DenseMatrix to_dense(const KronSum2D& m, std::size_t cap) {
  const std::size_t nx = m.gx.dim();
  const std::size_t ny = m.gy.dim();
  const std::size_t n = nx * ny;
  check_cap(n, cap, "to_dense(KronSum2D)");
  const DenseMatrix ax = to_dense(m.gx, cap);
  const DenseMatrix ay = to_dense(m.gy, cap);
  DenseMatrix a(n, n);
  for (std::size_t j = 0; j < ny; ++j) {
    for (std::size_t i = 0; i < nx; ++i) {
      const std::size_t row = j * nx + i;
      a(row, row) += m.shift;
      for (std::size_t i2 = 0; i2 < nx; ++i2) {
        a(row, j * nx + i2) += m.scale_x * ax(i, i2);
      }
      for (std::size_t j2 = 0; j2 < ny; ++j2) {
        a(row, j2 * nx + i) += m.scale_y * ay(j, j2);
      }
    }
  }
  return a;
}

DenseMatrix to_dense(const BccbPrecond& p, std::size_t cap) {
  const std::size_t nx = p.cx().dim();
  const std::size_t ny = p.cy().dim();
  const std::size_t n = nx * ny;
  check_cap(n, cap, "to_dense(BccbPrecond)");
  const DenseMatrix ax = to_dense(p.cx(), cap);
  const DenseMatrix ay = to_dense(p.cy(), cap);
  DenseMatrix a(n, n);
  for (std::size_t j = 0; j < ny; ++j) {
    for (std::size_t i = 0; i < nx; ++i) {
      const std::size_t row = j * nx + i;
      a(row, row) += p.shift();
      for (std::size_t i2 = 0; i2 < nx; ++i2) {
        a(row, j * nx + i2) += p.scale_x() * ax(i, i2);
      }
      for (std::size_t j2 = 0; j2 < ny; ++j2) {
        a(row, j2 * nx + i) += p.scale_y() * ay(j, j2);
      }
    }
  }
  return a;
}

}  // namespace distfrac
