#pragma once

#include <cstddef>
#include <functional>
#include <string>

#include "distfrac/dense.hpp"
#include "distfrac/quadrature.hpp"

namespace distfrac {

enum class SolverKind { cholesky, cg, pcg };
enum class PrecondKind { none, strang, tchan, rchan };

SolverKind solver_from_string(const std::string& name);
PrecondKind precond_from_string(const std::string& name);
std::string to_string(SolverKind kind);
std::string to_string(PrecondKind kind);

/// 1D diffusion problem on (0, length) × (0, final_time] with homogeneous
/// boundary values.
struct Problem1D {
  double length = 1.0;
  double final_time = 1.0;
  double diffusivity = 1.0;                          // K > 0
  double space_order = 1.5;                          // in (1, 2]
  WeightFunction weight;                             // ω over [0, 1]
  std::function<double(double, double)> source;      // f(x, t)
  std::function<double(double)> initial;             // φ(x)
  std::function<double(double, double)> exact;       // optional
};

/// 2D problem on (0, length_x) × (0, length_y); the initial field vanishes
/// on the boundary ring.
struct Problem2D {
  double length_x = 1.0;
  double length_y = 1.0;
  double final_time = 1.0;
  double diffusivity_x = 1.0;                              // K₁ > 0
  double diffusivity_y = 1.0;                              // K₂ >= 0
  double order_x = 1.5;                                    // β
  double order_y = 1.5;                                    // γ
  WeightFunction weight;
  std::function<double(double, double, double)> source;   // f(x, y, t)
  std::function<double(double, double)> initial;           // φ(x, y)
  std::function<double(double, double, double)> exact;     // optional
};

struct Discretization1D {
  std::size_t space_intervals = 2;   // M >= 2
  std::size_t time_steps = 1;        // N >= 1
  std::size_t alpha_half_count = 1;  // J >= 1
  SolverKind solver = SolverKind::pcg;
  PrecondKind precond = PrecondKind::rchan;
  std::size_t dense_cap = kDefaultDenseCap;
  double tolerance = 1e-12;
  std::size_t max_iterations = 0;    // 0 -> 10 × dimension
};

struct Discretization2D {
  std::size_t space_intervals_x = 2;  // M₁
  std::size_t space_intervals_y = 2;  // M₂
  std::size_t time_steps = 1;
  std::size_t alpha_half_count = 1;
  SolverKind solver = SolverKind::pcg;
  PrecondKind precond = PrecondKind::rchan;
  std::size_t dense_cap = kDefaultDenseCap;
  double tolerance = 1e-12;
  std::size_t max_iterations = 0;
};

}  // namespace distfrac
