#include "distfrac/scheme2d.hpp"

#include <chrono>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>

#include "distfrac/errors.hpp"
#include "distfrac/krylov.hpp"
#include "distfrac/operators.hpp"
#include "distfrac/stencil.hpp"

namespace distfrac {

double Solution2D::average_iterations() const {
  if (steps.empty()) return 0.0;
  double total = 0.0;
  for (const auto& s : steps) total += static_cast<double>(s.iterations);
  return total / static_cast<double>(steps.size());
}

void interior_from_field(std::span<const double> field, std::size_t mx,
                         std::size_t my, std::span<double> interior) {
  const std::size_t nx = mx - 1;
  const std::size_t ny = my - 1;
  if (field.size() != (mx + 1) * (my + 1) || interior.size() != nx * ny) {
    throw std::invalid_argument("interior_from_field: dimension mismatch");
  }
  for (std::size_t j = 1; j <= ny; ++j) {
    for (std::size_t i = 1; i <= nx; ++i) {
      interior[(j - 1) * nx + (i - 1)] = field[j * (mx + 1) + i];
    }
  }
}

void field_from_interior(std::span<const double> interior, std::size_t mx,
                         std::size_t my, std::span<double> field) {
  const std::size_t nx = mx - 1;
  const std::size_t ny = my - 1;
  if (field.size() != (mx + 1) * (my + 1) || interior.size() != nx * ny) {
    throw std::invalid_argument("field_from_interior: dimension mismatch");
  }
  for (auto& v : field) v = 0.0;
  for (std::size_t j = 1; j <= ny; ++j) {
    for (std::size_t i = 1; i <= nx; ++i) {
      field[j * (mx + 1) + i] = interior[(j - 1) * nx + (i - 1)];
    }
  }
}

std::vector<double> assemble_rhs_2d(
    std::span<const double> history, std::size_t mx, std::size_t my,
    const TemporalCoefficients& coeffs, const SymToeplitz& gx,
    const SymToeplitz& gy, double sigma, double diffusivity_x,
    double diffusivity_y, double hx, double hy, double order_x, double order_y,
    std::span<const double> source_slice) {
  const std::size_t nx = mx - 1;
  const std::size_t ny = my - 1;
  const std::size_t interior = nx * ny;
  const std::size_t field_size = (mx + 1) * (my + 1);
  const std::size_t n = coeffs.level;
  if (gx.dim() != nx || gy.dim() != ny || source_slice.size() != interior) {
    throw std::invalid_argument("assemble_rhs_2d: dimension mismatch");
  }
  if (history.size() < n * field_size) {
    throw std::invalid_argument("assemble_rhs_2d: history too short");
  }
  const auto& ladder = coeffs.ladder;

  std::vector<double> level_buf(interior);
  const auto level_interior = [&](std::size_t lvl,
                                  std::span<double> out) {
    interior_from_field(history.subspan(lvl * field_size, field_size), mx, my,
                        out);
  };

  const KronSum2D bare{0.0, diffusivity_x * std::pow(hx, -order_x),
                       diffusivity_y * std::pow(hy, -order_y), gx, gy};
  std::vector<double> rhs(interior);
  level_interior(n - 1, level_buf);
  bare.apply(level_buf, rhs);
  const double operator_factor = -(1.0 - sigma);
  for (auto& v : rhs) v *= operator_factor;

  level_interior(0, level_buf);
  for (std::size_t p = 0; p < interior; ++p) {
    rhs[p] += ladder[n - 1] * level_buf[p] + source_slice[p];
  }
  for (std::size_t k = 1; k < n; ++k) {
    const double weight = ladder[k - 1] - ladder[k];
    level_interior(n - k, level_buf);
    for (std::size_t p = 0; p < interior; ++p) {
      rhs[p] += weight * level_buf[p];
    }
  }
  return rhs;
}

Solution2D solve_2d(const Problem2D& problem, const Discretization2D& disc) {
  const std::size_t mx = disc.space_intervals_x;
  const std::size_t my = disc.space_intervals_y;
  const std::size_t n_steps = disc.time_steps;
  if (mx < 2 || my < 2) {
    throw std::invalid_argument("solve_2d: need at least 2 intervals per axis");
  }
  if (n_steps < 1) {
    throw std::invalid_argument("solve_2d: need at least 1 time step");
  }
  if (!(problem.diffusivity_x > 0.0) || !(problem.diffusivity_y >= 0.0)) {
    throw std::invalid_argument("solve_2d: inadmissible diffusivities");
  }
  const std::size_t nx = mx - 1;
  const std::size_t ny = my - 1;
  const std::size_t interior = nx * ny;
  const double hx = problem.length_x / static_cast<double>(mx);
  const double hy = problem.length_y / static_cast<double>(my);
  const double tau = problem.final_time / static_cast<double>(n_steps);

  const auto quad = build_quadrature(problem.weight, disc.alpha_half_count);
  const double sigma = sigma_root(quad, tau);
  const TemporalLadderTable table(quad, tau, sigma, n_steps);

  const auto stencil_x =
      build_stencil(problem.order_x, std::max<std::size_t>(nx - 1, 1));
  const auto stencil_y =
      build_stencil(problem.order_y, std::max<std::size_t>(ny - 1, 1));
  const SymToeplitz gx(
      std::vector<double>(stencil_x.g.begin(), stencil_x.g.begin() + nx));
  const SymToeplitz gy(
      std::vector<double>(stencil_y.g.begin(), stencil_y.g.begin() + ny));

  const double bare_scale_x =
      problem.diffusivity_x * std::pow(hx, -problem.order_x);
  const double bare_scale_y =
      problem.diffusivity_y * std::pow(hy, -problem.order_y);

  Solution2D sol;
  sol.space_intervals_x = mx;
  sol.space_intervals_y = my;
  sol.time_steps = n_steps;
  sol.mesh_width_x = hx;
  sol.mesh_width_y = hy;
  sol.time_step = tau;
  sol.sigma = sigma;
  sol.shift_first = table.tail(1);
  sol.shift_steady = n_steps >= 2 ? table.head(0) : table.tail(1);
  sol.history.assign((n_steps + 1) * sol.field_size(), 0.0);
  sol.steps.resize(n_steps);
  for (std::size_t j = 1; j < my; ++j) {
    for (std::size_t i = 1; i < mx; ++i) {
      sol.history[j * (mx + 1) + i] = problem.initial(
          static_cast<double>(i) * hx, static_cast<double>(j) * hy);
    }
  }

  const KronSum2D op_first{sol.shift_first, sigma * bare_scale_x,
                           sigma * bare_scale_y, gx, gy};
  const KronSum2D op_steady{sol.shift_steady, sigma * bare_scale_x,
                            sigma * bare_scale_y, gx, gy};
  const auto as_linear_op = [interior](const KronSum2D& op) {
    return LinearOperator{
        interior, [&op](std::span<const double> v, std::span<double> out) {
          op.apply(v, out);
        }};
  };
  const std::size_t max_it =
      disc.max_iterations > 0 ? disc.max_iterations : 10 * interior;

  std::optional<CholeskyFactor> chol_first;
  std::optional<CholeskyFactor> chol_steady;
  std::optional<BccbPrecond> prec_first;
  std::optional<BccbPrecond> prec_steady;
  double setup_seconds = 0.0;
  if (disc.solver == SolverKind::cholesky) {
    const auto t0 = std::chrono::steady_clock::now();
    chol_first.emplace(to_dense(op_first, disc.dense_cap));
    if (n_steps >= 2) chol_steady.emplace(to_dense(op_steady, disc.dense_cap));
    setup_seconds = std::chrono::duration<double>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
  } else if (disc.solver == SolverKind::pcg &&
             disc.precond != PrecondKind::none) {
    const auto circulant_of = [&disc](const SymToeplitz& g) {
      switch (disc.precond) {
        case PrecondKind::strang:
          return strang_circulant(g);
        case PrecondKind::tchan:
          return tchan_circulant(g);
        default:
          return rchan_circulant(g);
      }
    };
    CirculantOp cx = circulant_of(gx);
    CirculantOp cy = circulant_of(gy);
    prec_first.emplace(sol.shift_first, sigma * bare_scale_x,
                       sigma * bare_scale_y, cx, cy);
    prec_steady.emplace(sol.shift_steady, sigma * bare_scale_x,
                        sigma * bare_scale_y, std::move(cx), std::move(cy));
  }

  std::vector<double> source_slice(interior);
  double solver_seconds = setup_seconds;
  for (std::size_t n = 1; n <= n_steps; ++n) {
    const double sample_time = (static_cast<double>(n) - 1.0 + sigma) * tau;
    for (std::size_t j = 1; j < my; ++j) {
      for (std::size_t i = 1; i < mx; ++i) {
        source_slice[(j - 1) * nx + (i - 1)] =
            problem.source(static_cast<double>(i) * hx,
                           static_cast<double>(j) * hy, sample_time);
      }
    }
    const auto coeffs = table.coefficients(n);
    const auto rhs = assemble_rhs_2d(
        sol.history, mx, my, coeffs, gx, gy, sigma, problem.diffusivity_x,
        problem.diffusivity_y, hx, hy, problem.order_x, problem.order_y,
        source_slice);

    const bool first = (n == 1);
    std::vector<double> unknown;
    const auto t0 = std::chrono::steady_clock::now();
    if (disc.solver == SolverKind::cholesky) {
      unknown = (first ? *chol_first : *chol_steady).solve(rhs);
      sol.steps[n - 1] = StepStats{0, 0.0};
    } else {
      const auto& op = first ? op_first : op_steady;
      SolveReport report;
      if (disc.solver == SolverKind::cg ||
          disc.precond == PrecondKind::none) {
        report = cg(as_linear_op(op), rhs, disc.tolerance, max_it);
      } else {
        const auto& prec = first ? *prec_first : *prec_steady;
        const LinearOperator prec_op{
            interior, [&prec](std::span<const double> v,
                              std::span<double> out) { prec.solve(v, out); }};
        report = pcg(as_linear_op(op), prec_op, rhs, disc.tolerance, max_it);
      }
      if (!report.converged) {
        throw solver_failure_error("solve_2d: solver failed at step " +
                                   std::to_string(n));
      }
      sol.steps[n - 1] =
          StepStats{report.iterations, report.final_relative_residual};
      unknown = std::move(report.solution);
    }
    solver_seconds +=
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();

    field_from_interior(
        unknown, mx, my,
        std::span<double>(sol.history.data() + n * sol.field_size(),
                          sol.field_size()));
  }
  sol.solve_seconds = solver_seconds;
  return sol;
}

double max_error_2d(
    const Solution2D& s,
    const std::function<double(double, double, double)>& exact) {
  if (!exact) {
    throw std::invalid_argument("max_error_2d: exact solution missing");
  }
  double worst = 0.0;
  for (std::size_t n = 0; n <= s.time_steps; ++n) {
    const double t = static_cast<double>(n) * s.time_step;
    for (std::size_t j = 0; j <= s.space_intervals_y; ++j) {
      const double y = static_cast<double>(j) * s.mesh_width_y;
      for (std::size_t i = 0; i <= s.space_intervals_x; ++i) {
        const double x = static_cast<double>(i) * s.mesh_width_x;
        worst = std::max(worst, std::abs(exact(x, y, t) - s.value(n, i, j)));
      }
    }
  }
  return worst;
}

}  // namespace distfrac
