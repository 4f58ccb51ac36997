#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "distfrac/problem.hpp"
#include "distfrac/temporal.hpp"
#include "distfrac/toeplitz.hpp"

namespace distfrac {

struct StepStats {
  std::size_t iterations = 0;
  double relative_residual = 0.0;
};

/// Full trajectory of the 1D scheme: levels 0..N, each of length M+1 with
/// identically zero boundary entries.
struct Solution1D {
  std::size_t space_intervals = 0;  // M
  std::size_t time_steps = 0;       // N
  double mesh_width = 0.0;
  double time_step = 0.0;
  double sigma = 0.0;
  double shift_first = 0.0;   // ladder head at n = 1
  double shift_steady = 0.0;  // ladder head at n >= 2
  std::vector<double> history;      // (N+1) × (M+1), level-major
  std::vector<StepStats> steps;     // one entry per time step
  double solve_seconds = 0.0;       // linear-solver wall time only

  std::span<const double> level(std::size_t n) const {
    return {history.data() + n * (space_intervals + 1), space_intervals + 1};
  }
  double value(std::size_t n, std::size_t i) const {
    return history[n * (space_intervals + 1) + i];
  }
  double average_iterations() const;
};

/// Right-hand side at level n = coeffs.level from the stored history:
/// -(1-σ)·K·h^{-β}·G u^{n-1} + Σ (ladder differences)·u^{n-k}
/// + (ladder tail)·u⁰ + source slice. history must hold levels 0..n-1.
std::vector<double> assemble_rhs_1d(std::span<const double> history,
                                    std::size_t space_intervals,
                                    const TemporalCoefficients& coeffs,
                                    const SymToeplitz& g, double sigma,
                                    double diffusivity, double mesh_width,
                                    double space_order,
                                    std::span<const double> source_slice);

Solution1D solve_1d(const Problem1D& problem, const Discretization1D& disc);

/// Max |exact - numerical| over every grid point and every level 0..N.
double max_error_1d(const Solution1D& s,
                    const std::function<double(double, double)>& exact);

}  // namespace distfrac
