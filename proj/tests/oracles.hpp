#pragma once

// Independent reference implementations used only by tests. Everything here
// deliberately avoids the library's FFT and Lanczos paths: dense O(n²)
// products, textbook Gaussian elimination, std::tgamma, and a from-scratch
// time stepper written directly from the difference equations.

#include <cmath>
#include <cstddef>
#include <functional>
#include <random>
#include <span>
#include <vector>

namespace oracles {

// --- dense helpers -------------------------------------------------------

using Matrix = std::vector<std::vector<double>>;

inline Matrix dense_sym_toeplitz(const std::vector<double>& first_col) {
  const std::size_t n = first_col.size();
  Matrix a(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      a[i][j] = first_col[i >= j ? i - j : j - i];
    }
  }
  return a;
}

inline Matrix dense_circulant(const std::vector<double>& first_col) {
  const std::size_t n = first_col.size();
  Matrix a(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      a[i][j] = first_col[(i + n - j) % n];
    }
  }
  return a;
}

inline std::vector<double> matvec(const Matrix& a,
                                  std::span<const double> v) {
  std::vector<double> out(a.size(), 0.0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += a[i][j] * v[j];
  }
  return out;
}

// Gaussian elimination with partial pivoting.
inline std::vector<double> gauss_solve(Matrix a, std::vector<double> b) {
  const std::size_t n = a.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
    }
    std::swap(a[col], a[pivot]);
    std::swap(b[col], b[pivot]);
    for (std::size_t r = col + 1; r < n; ++r) {
      const double factor = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= factor * a[col][c];
      b[r] -= factor * b[col];
    }
  }
  std::vector<double> x(n, 0.0);
  for (std::size_t ii = n; ii-- > 0;) {
    double acc = b[ii];
    for (std::size_t c = ii + 1; c < n; ++c) acc -= a[ii][c] * x[c];
    x[ii] = acc / a[ii][ii];
  }
  return x;
}

// kron(a, b)
inline Matrix kron(const Matrix& a, const Matrix& b) {
  const std::size_t ar = a.size(), ac = a[0].size();
  const std::size_t br = b.size(), bc = b[0].size();
  Matrix out(ar * br, std::vector<double>(ac * bc, 0.0));
  for (std::size_t i = 0; i < ar; ++i) {
    for (std::size_t j = 0; j < ac; ++j) {
      for (std::size_t k = 0; k < br; ++k) {
        for (std::size_t l = 0; l < bc; ++l) {
          out[i * br + k][j * bc + l] = a[i][j] * b[k][l];
        }
      }
    }
  }
  return out;
}

inline Matrix identity(std::size_t n) {
  Matrix out(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) out[i][i] = 1.0;
  return out;
}

// shift·I + sx·(I_y ⊗ Gx) + sy·(Gy ⊗ I_x), x index fastest.
inline Matrix dense_kron_sum(double shift, double sx, double sy,
                             const std::vector<double>& gx_col,
                             const std::vector<double>& gy_col) {
  const Matrix gx = dense_sym_toeplitz(gx_col);
  const Matrix gy = dense_sym_toeplitz(gy_col);
  const std::size_t nx = gx_col.size(), ny = gy_col.size();
  const Matrix term_x = kron(identity(ny), gx);
  const Matrix term_y = kron(gy, identity(nx));
  Matrix out(nx * ny, std::vector<double>(nx * ny, 0.0));
  for (std::size_t i = 0; i < nx * ny; ++i) {
    for (std::size_t j = 0; j < nx * ny; ++j) {
      out[i][j] = sx * term_x[i][j] + sy * term_y[i][j];
    }
    out[i][i] += shift;
  }
  return out;
}

// --- temporal ladder, written straight from the interpolation formulas ----

struct LadderInput {
  std::vector<double> alphas;
  std::vector<double> lambdas;
};

inline std::vector<double> reference_ladder(const LadderInput& in, double tau,
                                            double sigma, std::size_t n) {
  std::vector<double> ladder(n, 0.0);
  for (std::size_t r = 0; r < in.alphas.size(); ++r) {
    const double alpha = in.alphas[r];
    const double lambda = in.lambdas[r];
    if (lambda == 0.0) continue;
    const double scale =
        lambda * std::pow(tau, -alpha) / std::tgamma(2.0 - alpha);
    auto a_of = [&](std::size_t l) {
      if (l == 0) return std::pow(sigma, 1.0 - alpha);
      return std::pow(l + sigma, 1.0 - alpha) -
             std::pow(l - 1.0 + sigma, 1.0 - alpha);
    };
    auto b_of = [&](std::size_t l) {
      return (std::pow(l + sigma, 2.0 - alpha) -
              std::pow(l - 1.0 + sigma, 2.0 - alpha)) /
                 (2.0 - alpha) -
             0.5 * (std::pow(l + sigma, 1.0 - alpha) +
                    std::pow(l - 1.0 + sigma, 1.0 - alpha));
    };
    for (std::size_t k = 0; k < n; ++k) {
      double c;
      if (alpha == 1.0) {
        c = (k == 0) ? 1.0 : 0.0;
      } else if (alpha == 0.0) {
        c = (k == 0) ? sigma : 1.0;
      } else if (n == 1) {
        c = a_of(0);
      } else if (k == 0) {
        c = a_of(0) + b_of(1);
      } else if (k + 1 < n) {
        c = a_of(k) + b_of(k + 1) - b_of(k);
      } else {
        c = a_of(k) - b_of(k);
      }
      ladder[k] += scale * c;
    }
  }
  return ladder;
}

// Lower bound on the last ladder entry (strict for admissible weights).
inline double ladder_tail_bound(const LadderInput& in, double tau,
                                double sigma, std::size_t n) {
  double bound = 0.0;
  for (std::size_t r = 0; r < in.alphas.size(); ++r) {
    const double alpha = in.alphas[r];
    bound += in.lambdas[r] * std::pow(tau, -alpha) /
             std::tgamma(2.0 - alpha) * 0.5 * (1.0 - alpha) *
             std::pow(n - 1.0 + sigma, -alpha);
  }
  return bound;
}

// --- from-scratch 1D time stepper ----------------------------------------
// Direct transcription of the pointwise difference equations: dense matrix,
// Gaussian elimination, no shared code with the library solver.

struct Naive1DInput {
  double length, final_time, diffusivity, order;
  LadderInput quadrature;  // full node/weight set, already trapezoid-weighted
  std::function<double(double, double)> source;
  std::function<double(double)> initial;
  std::size_t m, n_steps;
  double sigma;
};

inline std::vector<std::vector<double>> naive_solve_1d(const Naive1DInput& in) {
  const std::size_t m = in.m;
  const double h = in.length / m;
  const double tau = in.final_time / in.n_steps;
  const double sigma = in.sigma;

  // stencil from the ratio recurrence, long enough for every offset
  std::vector<double> g(m + 1);
  g[0] = std::tgamma(in.order + 1.0) /
         std::pow(std::tgamma(0.5 * in.order + 1.0), 2.0);
  for (std::size_t k = 1; k <= m; ++k) {
    g[k] = (1.0 - (in.order + 1.0) / (0.5 * in.order + k)) * g[k - 1];
  }

  std::vector<std::vector<double>> levels(in.n_steps + 1,
                                          std::vector<double>(m + 1, 0.0));
  for (std::size_t i = 1; i < m; ++i) levels[0][i] = in.initial(i * h);

  const double kh = in.diffusivity * std::pow(h, -in.order);
  for (std::size_t n = 1; n <= in.n_steps; ++n) {
    const auto ladder = reference_ladder(in.quadrature, tau, sigma, n);
    Matrix a(m - 1, std::vector<double>(m - 1, 0.0));
    std::vector<double> rhs(m - 1, 0.0);
    for (std::size_t i = 1; i < m; ++i) {
      const std::size_t row = i - 1;
      rhs[row] = in.source(i * h, (n - 1.0 + sigma) * tau);
      // history differences
      for (std::size_t k = 1; k < n; ++k) {
        rhs[row] += (ladder[k - 1] - ladder[k]) * levels[n - k][i];
      }
      rhs[row] += ladder[n - 1] * levels[0][i];
      a[row][row] += ladder[0];
      // spatial sum over every offset hitting the open interval
      for (std::ptrdiff_t k = static_cast<std::ptrdiff_t>(i) -
                              static_cast<std::ptrdiff_t>(m);
           k <= static_cast<std::ptrdiff_t>(i); ++k) {
        const std::size_t target = i - k;
        if (target == 0 || target == m) continue;
        const double coeff = g[static_cast<std::size_t>(std::abs(k))];
        a[row][target - 1] += kh * sigma * coeff;
        rhs[row] -= kh * (1.0 - sigma) * coeff * levels[n - 1][target];
      }
    }
    const auto interior = gauss_solve(a, rhs);
    for (std::size_t i = 1; i < m; ++i) levels[n][i] = interior[i - 1];
  }
  return levels;
}

// --- from-scratch 2D time stepper ----------------------------------------

struct Naive2DInput {
  double length_x, length_y, final_time;
  double diffusivity_x, diffusivity_y, order_x, order_y;
  LadderInput quadrature;
  std::function<double(double, double, double)> source;
  std::function<double(double, double)> initial;
  std::size_t mx, my, n_steps;
  double sigma;
};

inline std::vector<std::vector<double>> naive_solve_2d(const Naive2DInput& in) {
  const std::size_t mx = in.mx, my = in.my;
  const double hx = in.length_x / mx;
  const double hy = in.length_y / my;
  const double tau = in.final_time / in.n_steps;
  const double sigma = in.sigma;

  auto stencil = [](double order, std::size_t count) {
    std::vector<double> g(count + 1);
    g[0] = std::tgamma(order + 1.0) /
           std::pow(std::tgamma(0.5 * order + 1.0), 2.0);
    for (std::size_t k = 1; k <= count; ++k) {
      g[k] = (1.0 - (order + 1.0) / (0.5 * order + k)) * g[k - 1];
    }
    return g;
  };
  const auto gx = stencil(in.order_x, mx);
  const auto gy = stencil(in.order_y, my);
  const double khx = in.diffusivity_x * std::pow(hx, -in.order_x);
  const double khy = in.diffusivity_y * std::pow(hy, -in.order_y);

  const std::size_t stride = mx + 1;
  const std::size_t field = (mx + 1) * (my + 1);
  std::vector<std::vector<double>> levels(in.n_steps + 1,
                                          std::vector<double>(field, 0.0));
  for (std::size_t j = 1; j < my; ++j) {
    for (std::size_t i = 1; i < mx; ++i) {
      levels[0][j * stride + i] = in.initial(i * hx, j * hy);
    }
  }

  const std::size_t unknowns = (mx - 1) * (my - 1);
  auto pack = [&](std::size_t i, std::size_t j) {
    return (j - 1) * (mx - 1) + (i - 1);
  };
  for (std::size_t n = 1; n <= in.n_steps; ++n) {
    const auto ladder = reference_ladder(in.quadrature, tau, sigma, n);
    Matrix a(unknowns, std::vector<double>(unknowns, 0.0));
    std::vector<double> rhs(unknowns, 0.0);
    for (std::size_t j = 1; j < my; ++j) {
      for (std::size_t i = 1; i < mx; ++i) {
        const std::size_t row = pack(i, j);
        rhs[row] = in.source(i * hx, j * hy, (n - 1.0 + sigma) * tau);
        for (std::size_t k = 1; k < n; ++k) {
          rhs[row] += (ladder[k - 1] - ladder[k]) * levels[n - k][j * stride + i];
        }
        rhs[row] += ladder[n - 1] * levels[0][j * stride + i];
        a[row][row] += ladder[0];
        for (std::ptrdiff_t k = static_cast<std::ptrdiff_t>(i) -
                                static_cast<std::ptrdiff_t>(mx);
             k <= static_cast<std::ptrdiff_t>(i); ++k) {
          const std::size_t ti = i - k;
          if (ti == 0 || ti == mx) continue;
          const double coeff = gx[static_cast<std::size_t>(std::abs(k))];
          a[row][pack(ti, j)] += khx * sigma * coeff;
          rhs[row] -= khx * (1.0 - sigma) * coeff * levels[n - 1][j * stride + ti];
        }
        for (std::ptrdiff_t k = static_cast<std::ptrdiff_t>(j) -
                                static_cast<std::ptrdiff_t>(my);
             k <= static_cast<std::ptrdiff_t>(j); ++k) {
          const std::size_t tj = j - k;
          if (tj == 0 || tj == my) continue;
          const double coeff = gy[static_cast<std::size_t>(std::abs(k))];
          a[row][pack(i, tj)] += khy * sigma * coeff;
          rhs[row] -= khy * (1.0 - sigma) * coeff * levels[n - 1][tj * stride + i];
        }
      }
    }
    const auto interior = gauss_solve(a, rhs);
    for (std::size_t j = 1; j < my; ++j) {
      for (std::size_t i = 1; i < mx; ++i) {
        levels[n][j * stride + i] = interior[pack(i, j)];
      }
    }
  }
  return levels;
}

// --- misc ------------------------------------------------------------------

inline std::vector<double> random_vector(std::mt19937& rng, std::size_t n,
                                         double lo = -1.0, double hi = 1.0) {
  std::uniform_real_distribution<double> dist(lo, hi);
  std::vector<double> out(n);
  for (auto& v : out) v = dist(rng);
  return out;
}

inline double max_abs_diff(std::span<const double> a,
                           std::span<const double> b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    worst = std::max(worst, std::abs(a[i] - b[i]));
  }
  return worst;
}

inline double max_abs(std::span<const double> a) {
  double worst = 0.0;
  for (double v : a) worst = std::max(worst, std::abs(v));
  return worst;
}

}  // namespace oracles
