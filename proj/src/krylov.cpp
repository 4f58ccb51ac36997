#include "distfrac/krylov.hpp"

#include <cmath>
#include <stdexcept>

#include "distfrac/errors.hpp"

namespace distfrac {

namespace {

double dot(std::span<const double> x, std::span<const double> y) {
  double acc = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) acc += x[i] * y[i];
  return acc;
}

double norm2(std::span<const double> x) { return std::sqrt(dot(x, x)); }

}  // namespace

SolveReport cg(const LinearOperator& a, std::span<const double> b, double tol,
               std::size_t max_iterations) {
  const std::size_t n = a.dim;
  if (b.size() != n) {
    throw std::invalid_argument("cg: right-hand side dimension mismatch");
  }
  SolveReport report;
  report.solution.assign(n, 0.0);

  std::vector<double> residual(b.begin(), b.end());
  const double b_norm = norm2(residual);
  if (b_norm == 0.0) {
    report.converged = true;
    return report;
  }
  std::vector<double> direction = residual;
  std::vector<double> a_dir(n);
  double rr = dot(residual, residual);

  for (std::size_t it = 1; it <= max_iterations; ++it) {
    a.apply(direction, a_dir);
    const double curvature = dot(direction, a_dir);
    if (!(curvature > 0.0)) {
      throw not_spd_error("cg: non-positive direction curvature");
    }
    const double alpha = rr / curvature;
    double rr_next = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      report.solution[i] += alpha * direction[i];
      const double updated = residual[i] - alpha * a_dir[i];
      residual[i] = updated;
      rr_next += updated * updated;
    }
    report.iterations = it;
    report.final_relative_residual = std::sqrt(rr_next) / b_norm;
    if (report.final_relative_residual < tol) {
      report.converged = true;
      return report;
    }
    const double beta = rr_next / rr;
    rr = rr_next;
    for (std::size_t i = 0; i < n; ++i) {
      direction[i] = residual[i] + beta * direction[i];
    }
  }
  return report;
}

SolveReport pcg(const LinearOperator& a, const LinearOperator& precond_solve,
                std::span<const double> b, double tol,
                std::size_t max_iterations) {
  const std::size_t n = a.dim;
  if (b.size() != n || precond_solve.dim != n) {
    throw std::invalid_argument("pcg: dimension mismatch");
  }
  SolveReport report;
  report.solution.assign(n, 0.0);

  std::vector<double> residual(b.begin(), b.end());
  const double b_norm = norm2(residual);
  if (b_norm == 0.0) {
    report.converged = true;
    return report;
  }
  std::vector<double> preconditioned(n);
  precond_solve.apply(residual, preconditioned);
  std::vector<double> direction = preconditioned;
  std::vector<double> a_dir(n);
  double rz = dot(residual, preconditioned);

  for (std::size_t it = 1; it <= max_iterations; ++it) {
    a.apply(direction, a_dir);
    const double curvature = dot(direction, a_dir);
    if (!(curvature > 0.0)) {
      throw not_spd_error("pcg: non-positive direction curvature");
    }
    const double alpha = rz / curvature;
    double rr_next = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      report.solution[i] += alpha * direction[i];
      const double updated = residual[i] - alpha * a_dir[i];
      residual[i] = updated;
      rr_next += updated * updated;
    }
    report.iterations = it;
    report.final_relative_residual = std::sqrt(rr_next) / b_norm;
    if (report.final_relative_residual < tol) {
      report.converged = true;
      return report;
    }
    precond_solve.apply(residual, preconditioned);
    const double rz_next = dot(residual, preconditioned);
    const double beta = rz_next / rz;
    rz = rz_next;
    for (std::size_t i = 0; i < n; ++i) {
      direction[i] = preconditioned[i] + beta * direction[i];
    }
  }
  return report;
}

}  // namespace distfrac
