#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "distfrac/problem.hpp"
#include "distfrac/scheme1d.hpp"
#include "distfrac/temporal.hpp"
#include "distfrac/toeplitz.hpp"

namespace distfrac {

/// Trajectory of the 2D scheme. Each level stores the full
/// (M₁+1) × (M₂+1) field, x index fastest, with a zero boundary ring.
struct Solution2D {
  std::size_t space_intervals_x = 0;  // M₁
  std::size_t space_intervals_y = 0;  // M₂
  std::size_t time_steps = 0;
  double mesh_width_x = 0.0;
  double mesh_width_y = 0.0;
  double time_step = 0.0;
  double sigma = 0.0;
  double shift_first = 0.0;
  double shift_steady = 0.0;
  std::vector<double> history;   // (N+1) × (M₁+1)(M₂+1)
  std::vector<StepStats> steps;
  double solve_seconds = 0.0;

  std::size_t field_size() const {
    return (space_intervals_x + 1) * (space_intervals_y + 1);
  }
  std::span<const double> level(std::size_t n) const {
    return {history.data() + n * field_size(), field_size()};
  }
  double value(std::size_t n, std::size_t i, std::size_t j) const {
    return history[n * field_size() + j * (space_intervals_x + 1) + i];
  }
  double average_iterations() const;
};

/// The one vectorize/devectorize pair shared by every 2D path: interior
/// unknowns are ordered x-fastest, fields carry the boundary ring.
void interior_from_field(std::span<const double> field, std::size_t mx,
                         std::size_t my, std::span<double> interior);
void field_from_interior(std::span<const double> interior, std::size_t mx,
                         std::size_t my, std::span<double> field);

std::vector<double> assemble_rhs_2d(
    std::span<const double> history, std::size_t mx, std::size_t my,
    const TemporalCoefficients& coeffs, const SymToeplitz& gx,
    const SymToeplitz& gy, double sigma, double diffusivity_x,
    double diffusivity_y, double hx, double hy, double order_x, double order_y,
    std::span<const double> source_slice);

Solution2D solve_2d(const Problem2D& problem, const Discretization2D& disc);

double max_error_2d(
    const Solution2D& s,
    const std::function<double(double, double, double)>& exact);

}  // namespace distfrac
