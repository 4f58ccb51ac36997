#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace distfrac {

/// Non-negative weight density over the fractional-order interval [0, 1].
using WeightFunction = std::function<double(double)>;

/// Nodes and weights discretizing the distributed-order integral
/// ∫₀¹ ω(α) dα on the uniform grid α_r = r/(2J), end weights halved.
struct DistributedOrderQuadrature {
  std::vector<double> nodes;    // increasing, within [0, 1]
  std::vector<double> weights;  // all >= 0, sum > 0

  std::size_t size() const { return nodes.size(); }
  double weight_sum() const;
};

/// Composite trapezoid rule on 2J uniform intervals. Rejects J = 0, a
/// negative weight value at any node, and an identically vanishing weight.
DistributedOrderQuadrature build_quadrature(const WeightFunction& omega,
                                            std::size_t half_count);

/// Explicit node/weight set, for single-order or otherwise degenerate
/// problems. Nodes must be strictly increasing within [0, 1].
DistributedOrderQuadrature quadrature_from_points(std::vector<double> nodes,
                                                  std::vector<double> weights);

/// Residual of the collocation-offset equation. Its unique positive root
/// places the off-grid interpolation time t_{n-1+sigma}.
double sigma_residual(const DistributedOrderQuadrature& quad, double tau,
                      double sigma);

/// Root of sigma_residual in [1/2, 1], bisected to 1e-14. Deterministic;
/// throws if the bracket carries no sign change (inadmissible weights).
double sigma_root(const DistributedOrderQuadrature& quad, double tau);

}  // namespace distfrac
