#include "distfrac/quadrature.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "distfrac/gamma.hpp"

namespace distfrac {

double DistributedOrderQuadrature::weight_sum() const {
  double sum = 0.0;
  for (double w : weights) sum += w;
  return sum;
}

DistributedOrderQuadrature build_quadrature(const WeightFunction& omega,
                                            std::size_t half_count) {
  if (half_count == 0) {
    throw std::invalid_argument("build_quadrature: J must be at least 1");
  }
  const std::size_t m = 2 * half_count;
  const double dalpha = 1.0 / static_cast<double>(m);

  DistributedOrderQuadrature quad;
  quad.nodes.resize(m + 1);
  quad.weights.resize(m + 1);
  for (std::size_t r = 0; r <= m; ++r) {
    const double alpha = static_cast<double>(r) / static_cast<double>(m);
    const double value = omega(alpha);
    if (!(value >= 0.0)) {
      throw std::invalid_argument(
          "build_quadrature: weight function is negative at alpha = " +
          std::to_string(alpha));
    }
    const double end_factor = (r == 0 || r == m) ? 0.5 : 1.0;
    quad.nodes[r] = alpha;
    quad.weights[r] = end_factor * value * dalpha;
  }
  if (!(quad.weight_sum() > 0.0)) {
    throw std::invalid_argument(
        "build_quadrature: weight function vanishes at every node");
  }
  return quad;
}

DistributedOrderQuadrature quadrature_from_points(std::vector<double> nodes,
                                                  std::vector<double> weights) {
  if (nodes.empty() || nodes.size() != weights.size()) {
    throw std::invalid_argument(
        "quadrature_from_points: need matching, non-empty nodes and weights");
  }
  double sum = 0.0;
  for (std::size_t r = 0; r < nodes.size(); ++r) {
    if (!(nodes[r] >= 0.0 && nodes[r] <= 1.0)) {
      throw std::invalid_argument(
          "quadrature_from_points: nodes must lie in [0, 1]");
    }
    if (r > 0 && !(nodes[r] > nodes[r - 1])) {
      throw std::invalid_argument(
          "quadrature_from_points: nodes must be strictly increasing");
    }
    if (!(weights[r] >= 0.0)) {
      throw std::invalid_argument(
          "quadrature_from_points: weights must be non-negative");
    }
    sum += weights[r];
  }
  if (!(sum > 0.0)) {
    throw std::invalid_argument(
        "quadrature_from_points: weights must not all vanish");
  }
  DistributedOrderQuadrature quad;
  quad.nodes = std::move(nodes);
  quad.weights = std::move(weights);
  return quad;
}

double sigma_residual(const DistributedOrderQuadrature& quad, double tau,
                      double sigma) {
  if (!(tau > 0.0)) {
    throw std::invalid_argument("sigma_residual: tau must be positive");
  }
  if (!(sigma >= 0.0)) {
    throw std::invalid_argument("sigma_residual: sigma must be non-negative");
  }
  double value = 0.0;
  for (std::size_t r = 0; r < quad.size(); ++r) {
    const double lambda = quad.weights[r];
    if (lambda == 0.0) continue;
    const double alpha = quad.nodes[r];
    value += lambda / gamma_fn(3.0 - alpha) * std::pow(sigma, 1.0 - alpha) *
             (sigma - (1.0 - 0.5 * alpha)) * std::pow(tau, 2.0 - alpha);
  }
  return value;
}

double sigma_root(const DistributedOrderQuadrature& quad, double tau) {
  if (!(quad.weight_sum() > 0.0)) {
    throw std::invalid_argument("sigma_root: all quadrature weights vanish");
  }
  double lo = 0.5;
  double hi = 1.0;
  const double f_lo = sigma_residual(quad, tau, lo);
  const double f_hi = sigma_residual(quad, tau, hi);
  if (f_lo == 0.0) return lo;
  if (f_hi == 0.0) return hi;
  if (f_lo > 0.0 || f_hi < 0.0) {
    throw std::invalid_argument(
        "sigma_root: no sign change on [1/2, 1]; weight function is not "
        "admissible");
  }
  while (hi - lo > 1e-14) {
    const double mid = 0.5 * (lo + hi);
    const double f_mid = sigma_residual(quad, tau, mid);
    if (f_mid == 0.0) return mid;
    if (f_mid < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace distfrac
