#pragma once

#include <optional>
#include <string>
#include <vector>

#include "distfrac/problem.hpp"

namespace distfrac {

/// A problem with a known exact solution attached, so discretization error
/// is directly measurable.
struct ManufacturedProblem {
  std::string name;
  int dimension = 1;
  std::optional<Problem1D> one_d;
  std::optional<Problem2D> two_d;
};

/// 1D benchmark: weight Γ(5-α), unit diffusivity on (0, 1), exact solution
/// t⁴·x³(1-x)³, zero initial data, source assembled in closed form.
ManufacturedProblem example1(double space_order);

/// 2D benchmark on the unit square with exact solution
/// t⁴·x³(1-x)³·y³(1-y)³.
ManufacturedProblem example2(double order_x, double order_y);

/// Name-based lookup; orders are runtime parameters. Unknown names raise an
/// error listing what is registered.
ManufacturedProblem registry_lookup(const std::string& name, double beta,
                                    double gamma);
std::vector<std::string> registered_problems();

/// The regularized (t-1)/ln t factor of the benchmark sources: series
/// expansion inside |t-1| < 1e-6, zero below 1e-300.
double log_ratio_factor(double t);

}  // namespace distfrac
