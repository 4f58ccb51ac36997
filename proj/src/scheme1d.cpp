#include "distfrac/scheme1d.hpp"

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

double Solution1D::average_iterations() const {
  if (steps.empty()) return 0.0;
  double total = 0.0;
  for (const auto& s : steps) total += static_cast<double>(s.iterations);
  return total / static_cast<double>(steps.size());
}

std::vector<double> assemble_rhs_1d(std::span<const double> history,
                                    std::size_t space_intervals,
                                    const TemporalCoefficients& coeffs,
                                    const SymToeplitz& g, double sigma,
                                    double diffusivity, double mesh_width,
                                    double space_order,
                                    std::span<const double> source_slice) {
  const std::size_t interior = space_intervals - 1;
  const std::size_t n = coeffs.level;
  if (g.dim() != interior || source_slice.size() != interior) {
    throw std::invalid_argument("assemble_rhs_1d: dimension mismatch");
  }
  if (history.size() < n * (space_intervals + 1)) {
    throw std::invalid_argument("assemble_rhs_1d: history too short");
  }
  const auto& ladder = coeffs.ladder;
  const auto level_interior = [&](std::size_t lvl) {
    return history.subspan(lvl * (space_intervals + 1) + 1, interior);
  };

  std::vector<double> rhs(interior);
  std::vector<double> g_prev(interior);
  g.matvec(level_interior(n - 1), g_prev);
  const double operator_factor =
      -(1.0 - sigma) * diffusivity * std::pow(mesh_width, -space_order);
  const auto initial = level_interior(0);
  for (std::size_t i = 0; i < interior; ++i) {
    rhs[i] = operator_factor * g_prev[i] + ladder[n - 1] * initial[i] +
             source_slice[i];
  }
  for (std::size_t k = 1; k < n; ++k) {
    const double weight = ladder[k - 1] - ladder[k];
    const auto level = level_interior(n - k);
    for (std::size_t i = 0; i < interior; ++i) {
      rhs[i] += weight * level[i];
    }
  }
  return rhs;
}

Solution1D solve_1d(const Problem1D& problem, const Discretization1D& disc) {
  const std::size_t m = disc.space_intervals;
  const std::size_t n_steps = disc.time_steps;
  if (m < 2) {
    throw std::invalid_argument("solve_1d: need at least 2 space intervals");
  }
  if (n_steps < 1) {
    throw std::invalid_argument("solve_1d: need at least 1 time step");
  }
  if (!(problem.diffusivity > 0.0)) {
    throw std::invalid_argument("solve_1d: diffusivity must be positive");
  }
  const std::size_t interior = m - 1;
  const double h = problem.length / static_cast<double>(m);
  const double tau = problem.final_time / static_cast<double>(n_steps);

  const auto quad = build_quadrature(problem.weight, disc.alpha_half_count);
  const double sigma = sigma_root(quad, tau);
  const TemporalLadderTable table(quad, tau, sigma, n_steps);

  const auto stencil = build_stencil(
      problem.space_order, std::max<std::size_t>(interior - 1, 1));
  std::vector<double> symbol(stencil.g.begin(), stencil.g.begin() + interior);
  const SymToeplitz g(std::move(symbol));
  const double scale =
      sigma * problem.diffusivity * std::pow(h, -problem.space_order);

  Solution1D sol;
  sol.space_intervals = m;
  sol.time_steps = n_steps;
  sol.mesh_width = h;
  sol.time_step = tau;
  sol.sigma = sigma;
  sol.shift_first = table.tail(1);
  sol.shift_steady = n_steps >= 2 ? table.head(0) : table.tail(1);
  sol.history.assign((n_steps + 1) * (m + 1), 0.0);
  sol.steps.resize(n_steps);
  for (std::size_t i = 1; i < m; ++i) {
    sol.history[i] = problem.initial(static_cast<double>(i) * h);
  }

  const ShiftedToeplitz1D op_first{sol.shift_first, scale, g};
  const ShiftedToeplitz1D op_steady{sol.shift_steady, scale, g};
  const auto as_linear_op = [interior](const ShiftedToeplitz1D& op) {
    return LinearOperator{
        interior, [&op](std::span<const double> v, std::span<double> out) {
          op.apply(v, out);
        }};
  };
  const std::size_t max_it =
      disc.max_iterations > 0 ? disc.max_iterations : 10 * interior;

  std::optional<CholeskyFactor> chol_first;
  std::optional<CholeskyFactor> chol_steady;
  std::optional<CirculantOp> prec_first;
  std::optional<CirculantOp> prec_steady;
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
    CirculantOp base = [&] {
      switch (disc.precond) {
        case PrecondKind::strang:
          return strang_circulant(g);
        case PrecondKind::tchan:
          return tchan_circulant(g);
        default:
          return rchan_circulant(g);
      }
    }();
    prec_first.emplace(shifted_circulant(sol.shift_first, scale, base));
    prec_steady.emplace(shifted_circulant(sol.shift_steady, scale, base));
  }

  std::vector<double> source_slice(interior);
  double solver_seconds = setup_seconds;
  for (std::size_t n = 1; n <= n_steps; ++n) {
    const double sample_time = (static_cast<double>(n) - 1.0 + sigma) * tau;
    for (std::size_t i = 1; i < m; ++i) {
      source_slice[i - 1] =
          problem.source(static_cast<double>(i) * h, sample_time);
    }
    const auto coeffs = table.coefficients(n);
    const auto rhs =
        assemble_rhs_1d(sol.history, m, coeffs, g, sigma, problem.diffusivity,
                        h, problem.space_order, source_slice);

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
        throw solver_failure_error("solve_1d: solver failed at step " +
                                   std::to_string(n));
      }
      sol.steps[n - 1] =
          StepStats{report.iterations, report.final_relative_residual};
      unknown = std::move(report.solution);
    }
    solver_seconds +=
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();

    double* level = sol.history.data() + n * (m + 1);
    for (std::size_t i = 0; i < interior; ++i) level[i + 1] = unknown[i];
  }
  sol.solve_seconds = solver_seconds;
  return sol;
}

double max_error_1d(const Solution1D& s,
                    const std::function<double(double, double)>& exact) {
  if (!exact) {
    throw std::invalid_argument("max_error_1d: exact solution missing");
  }
  double worst = 0.0;
  for (std::size_t n = 0; n <= s.time_steps; ++n) {
    const double t = static_cast<double>(n) * s.time_step;
    for (std::size_t i = 0; i <= s.space_intervals; ++i) {
      const double x = static_cast<double>(i) * s.mesh_width;
      worst = std::max(worst, std::abs(exact(x, t) - s.value(n, i)));
    }
  }
  return worst;
}

}  // namespace distfrac
