#include "distfrac/temporal.hpp"

#include <cmath>
#include <stdexcept>

#include "distfrac/gamma.hpp"

namespace distfrac {

namespace {

// a_l and b_l sequences for one order; b[0] is never used.
void order_sequences(double alpha, double sigma, std::size_t count,
                     std::vector<double>& a, std::vector<double>& b) {
  a.resize(count);
  b.resize(count);
  const double p1 = 1.0 - alpha;
  const double p2 = 2.0 - alpha;
  a[0] = std::pow(sigma, p1);
  if (count > 0) b[0] = 0.0;
  for (std::size_t l = 1; l < count; ++l) {
    const double hi = static_cast<double>(l) + sigma;
    const double lo = hi - 1.0;
    const double hi1 = std::pow(hi, p1);
    const double lo1 = std::pow(lo, p1);
    a[l] = hi1 - lo1;
    b[l] = (std::pow(hi, p2) - std::pow(lo, p2)) / p2 - 0.5 * (hi1 + lo1);
  }
}

}  // namespace

TemporalCoefficients temporal_coefficients(const DistributedOrderQuadrature& quad,
                                           double tau, double sigma,
                                           std::size_t level) {
  if (level < 1) {
    throw std::invalid_argument("temporal_coefficients: level must be >= 1");
  }
  if (!(tau > 0.0) || !(sigma > 0.0)) {
    throw std::invalid_argument(
        "temporal_coefficients: tau and sigma must be positive");
  }

  TemporalCoefficients out;
  out.sigma = sigma;
  out.tau = tau;
  out.level = level;
  out.ladder.assign(level, 0.0);
  out.a.resize(quad.size());
  out.b.resize(quad.size());

  // b is needed up to index level (b_{k+1} with k = n-2 reaches b_{n-1};
  // one extra slot keeps the middle branch uniform).
  for (std::size_t r = 0; r < quad.size(); ++r) {
    const double alpha = quad.nodes[r];
    const double lambda = quad.weights[r];
    order_sequences(alpha, sigma, level + 1, out.a[r], out.b[r]);
    if (lambda == 0.0) continue;
    const double scale =
        lambda * std::pow(tau, -alpha) / gamma_fn(2.0 - alpha);
    const auto& a = out.a[r];
    const auto& b = out.b[r];
    for (std::size_t k = 0; k < level; ++k) {
      double c;
      if (alpha == 1.0) {
        c = (k == 0) ? 1.0 : 0.0;
      } else if (alpha == 0.0) {
        c = (k == 0) ? sigma : 1.0;
      } else if (level == 1) {
        c = a[0];
      } else if (k == 0) {
        c = a[0] + b[1];
      } else if (k + 1 < level) {
        c = a[k] + b[k + 1] - b[k];
      } else {
        c = a[k] - b[k];
      }
      out.ladder[k] += scale * c;
    }
  }
  return out;
}

TemporalLadderTable::TemporalLadderTable(const DistributedOrderQuadrature& quad,
                                         double tau, double sigma,
                                         std::size_t max_level)
    : sigma_(sigma), tau_(tau) {
  if (max_level < 1) {
    throw std::invalid_argument("TemporalLadderTable: max_level must be >= 1");
  }
  if (!(tau > 0.0) || !(sigma > 0.0)) {
    throw std::invalid_argument(
        "TemporalLadderTable: tau and sigma must be positive");
  }
  head_.assign(max_level, 0.0);
  tail_.assign(max_level, 0.0);

  std::vector<double> a;
  std::vector<double> b;
  for (std::size_t r = 0; r < quad.size(); ++r) {
    const double lambda = quad.weights[r];
    if (lambda == 0.0) continue;
    const double alpha = quad.nodes[r];
    const double scale =
        lambda * std::pow(tau, -alpha) / gamma_fn(2.0 - alpha);
    if (alpha == 1.0) {
      head_[0] += scale;
      tail_[0] += scale;
      continue;
    }
    if (alpha == 0.0) {
      head_[0] += scale * sigma;
      for (std::size_t k = 1; k < max_level; ++k) head_[k] += scale;
      tail_[0] += scale * sigma;
      for (std::size_t n = 2; n <= max_level; ++n) tail_[n - 1] += scale;
      continue;
    }
    order_sequences(alpha, sigma, max_level + 1, a, b);
    head_[0] += scale * (a[0] + b[1]);
    for (std::size_t k = 1; k < max_level; ++k) {
      head_[k] += scale * (a[k] + b[k + 1] - b[k]);
    }
    tail_[0] += scale * a[0];
    for (std::size_t n = 2; n <= max_level; ++n) {
      tail_[n - 1] += scale * (a[n - 1] - b[n - 1]);
    }
  }
}

std::vector<double> TemporalLadderTable::ladder(std::size_t level) const {
  if (level < 1 || level > max_level()) {
    throw std::invalid_argument("TemporalLadderTable: level out of range");
  }
  std::vector<double> out(level);
  for (std::size_t k = 0; k + 1 < level; ++k) out[k] = head_[k];
  out[level - 1] = tail(level);
  return out;
}

TemporalCoefficients TemporalLadderTable::coefficients(std::size_t level) const {
  TemporalCoefficients out;
  out.sigma = sigma_;
  out.tau = tau_;
  out.level = level;
  out.ladder = ladder(level);
  return out;
}

}  // namespace distfrac
