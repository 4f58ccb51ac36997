#pragma once

#include <cstddef>
#include <vector>

#include "distfrac/quadrature.hpp"

namespace distfrac {

/// Coefficients of the interpolation-based discrete time derivative at one
/// level n: the strictly decreasing ladder that weights solution-history
/// differences, plus the per-order helper sequences it was assembled from.
struct TemporalCoefficients {
  double sigma = 0.0;
  double tau = 0.0;
  std::size_t level = 0;                 // n
  std::vector<double> ladder;            // n entries, index k = 0..n-1
  std::vector<std::vector<double>> a;    // per order r: a[r][l], l = 0..n-1
  std::vector<std::vector<double>> b;    // per order r: b[r][l], b[r][0] unused
};

/// Ladder for one level, assembled per order with the three-branch split
/// (k = 0; middle; k = n-1) and the exact closed forms at orders 0 and 1.
TemporalCoefficients temporal_coefficients(const DistributedOrderQuadrature& quad,
                                           double tau, double sigma,
                                           std::size_t level);

/// Ladder factory for a whole run. The head entries are level-independent
/// (only the k = n-1 tail changes with n), so the table costs
/// O(levels · orders) once and each materialized ladder O(n).
class TemporalLadderTable {
 public:
  TemporalLadderTable(const DistributedOrderQuadrature& quad, double tau,
                      double sigma, std::size_t max_level);

  double sigma() const { return sigma_; }
  double tau() const { return tau_; }
  std::size_t max_level() const { return tail_.size(); }

  /// Ladder entry at position k for any level n >= k + 2.
  double head(std::size_t k) const { return head_[k]; }
  /// Ladder entry at position n - 1 (the level-dependent tail).
  double tail(std::size_t level) const { return tail_[level - 1]; }

  std::vector<double> ladder(std::size_t level) const;
  TemporalCoefficients coefficients(std::size_t level) const;

 private:
  double sigma_ = 0.0;
  double tau_ = 0.0;
  std::vector<double> head_;  // k = 0..max_level-1
  std::vector<double> tail_;  // n = 1..max_level at tail_[n-1]
};

}  // namespace distfrac
