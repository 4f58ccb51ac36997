#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace distfrac {

/// Matrix-free SPD operator. apply(v, out) computes A·v; out never aliases v.
struct LinearOperator {
  std::size_t dim = 0;
  std::function<void(std::span<const double>, std::span<double>)> apply;
};

struct SolveReport {
  std::vector<double> solution;
  std::size_t iterations = 0;
  double final_relative_residual = 0.0;
  bool converged = false;
};

/// Conjugate gradients from the zero initial guess, stopping on the true
/// residual ‖r_k‖₂/‖r_0‖₂ < tol. One iteration is one A product. Returns
/// converged = false past max_iterations; a non-positive direction
/// curvature throws not_spd_error.
SolveReport cg(const LinearOperator& a, std::span<const double> b, double tol,
               std::size_t max_iterations);

/// Preconditioned conjugate gradients; precond_solve applies P⁻¹. The
/// stopping rule uses the same true residual as cg, so the two report
/// comparable counts, and with the identity preconditioner the iterate
/// sequence coincides with cg.
SolveReport pcg(const LinearOperator& a, const LinearOperator& precond_solve,
                std::span<const double> b, double tol,
                std::size_t max_iterations);

}  // namespace distfrac
