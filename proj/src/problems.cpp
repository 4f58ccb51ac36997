#include "distfrac/problems.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "distfrac/gamma.hpp"

namespace distfrac {

SolverKind solver_from_string(const std::string& name) {
  if (name == "cholesky") return SolverKind::cholesky;
  if (name == "cg") return SolverKind::cg;
  if (name == "pcg") return SolverKind::pcg;
  throw std::invalid_argument("unknown solver '" + name +
                              "' (expected cholesky, cg or pcg)");
}

PrecondKind precond_from_string(const std::string& name) {
  if (name == "none") return PrecondKind::none;
  if (name == "strang") return PrecondKind::strang;
  if (name == "tchan") return PrecondKind::tchan;
  if (name == "rchan") return PrecondKind::rchan;
  throw std::invalid_argument("unknown preconditioner '" + name +
                              "' (expected none, strang, tchan or rchan)");
}

std::string to_string(SolverKind kind) {
  switch (kind) {
    case SolverKind::cholesky:
      return "cholesky";
    case SolverKind::cg:
      return "cg";
    default:
      return "pcg";
  }
}

std::string to_string(PrecondKind kind) {
  switch (kind) {
    case PrecondKind::none:
      return "none";
    case PrecondKind::strang:
      return "strang";
    case PrecondKind::tchan:
      return "tchan";
    default:
      return "rchan";
  }
}

double log_ratio_factor(double t) {
  if (t < 1e-300) return 0.0;
  const double s = t - 1.0;
  if (std::abs(s) < 1e-6) {
    return 1.0 + 0.5 * s - s * s / 12.0;
  }
  return s / std::log(t);
}

namespace {

// Γ(p+1)/Γ(p+1-order) prefactors of the four fractional power terms in the
// benchmark sources, p = 3..6.
struct RieszSourceTerms {
  double r1, r2, r3, r4;
  explicit RieszSourceTerms(double order)
      : r1(gamma_fn(4.0) / gamma_fn(4.0 - order)),
        r2(gamma_fn(5.0) / gamma_fn(5.0 - order)),
        r3(gamma_fn(6.0) / gamma_fn(6.0 - order)),
        r4(gamma_fn(7.0) / gamma_fn(7.0 - order)) {}

  double bracket(double x, double order) const {
    const double y = 1.0 - x;
    const double f1 = r1 * (std::pow(x, 3.0 - order) + std::pow(y, 3.0 - order));
    const double f2 = r2 * (std::pow(x, 4.0 - order) + std::pow(y, 4.0 - order));
    const double f3 = r3 * (std::pow(x, 5.0 - order) + std::pow(y, 5.0 - order));
    const double f4 = r4 * (std::pow(x, 6.0 - order) + std::pow(y, 6.0 - order));
    return f1 - 3.0 * f2 + 3.0 * f3 - f4;
  }
};

double cube_bump(double x) {
  const double w = x * (1.0 - x);
  return w * w * w;
}

double riesz_constant(double order) {
  return -1.0 / (2.0 * std::cos(order * std::numbers::pi / 2.0));
}

}  // namespace

ManufacturedProblem example1(double space_order) {
  if (!(space_order > 1.0 && space_order < 2.0)) {
    throw std::invalid_argument(
        "example1: order must lie in (1, 2); the closed-form source targets "
        "strictly fractional orders");
  }
  const double order = space_order;
  const double c = riesz_constant(order);
  const RieszSourceTerms terms(order);

  Problem1D p;
  p.length = 1.0;
  p.final_time = 1.5;
  p.diffusivity = 1.0;
  p.space_order = order;
  p.weight = [](double alpha) { return gamma_fn(5.0 - alpha); };
  p.initial = [](double) { return 0.0; };
  p.exact = [](double x, double t) {
    return t * t * t * t * cube_bump(x);
  };
  p.source = [order, c, terms](double x, double t) {
    const double t3 = t * t * t;
    const double f0 = 24.0 * t3 * log_ratio_factor(t) * cube_bump(x);
    return f0 - c * t3 * t * terms.bracket(x, order);
  };
  return ManufacturedProblem{"example1", 1, std::move(p), std::nullopt};
}

ManufacturedProblem example2(double order_x, double order_y) {
  if (!(order_x > 1.0 && order_x < 2.0) ||
      !(order_y > 1.0 && order_y < 2.0)) {
    throw std::invalid_argument("example2: orders must lie in (1, 2)");
  }
  const double cx = riesz_constant(order_x);
  const double cy = riesz_constant(order_y);
  const RieszSourceTerms terms_x(order_x);
  const RieszSourceTerms terms_y(order_y);

  Problem2D p;
  p.length_x = 1.0;
  p.length_y = 1.0;
  p.final_time = 1.5;
  p.diffusivity_x = 1.0;
  p.diffusivity_y = 1.0;
  p.order_x = order_x;
  p.order_y = order_y;
  p.weight = [](double alpha) { return gamma_fn(5.0 - alpha); };
  p.initial = [](double, double) { return 0.0; };
  p.exact = [](double x, double y, double t) {
    return t * t * t * t * cube_bump(x) * cube_bump(y);
  };
  p.source = [order_x, order_y, cx, cy, terms_x, terms_y](double x, double y,
                                                          double t) {
    const double t3 = t * t * t;
    const double t4 = t3 * t;
    const double f0 =
        24.0 * t3 * log_ratio_factor(t) * cube_bump(x) * cube_bump(y);
    return f0 - cx * t4 * cube_bump(y) * terms_x.bracket(x, order_x) -
           cy * t4 * cube_bump(x) * terms_y.bracket(y, order_y);
  };
  return ManufacturedProblem{"example2", 2, std::nullopt, std::move(p)};
}

ManufacturedProblem registry_lookup(const std::string& name, double beta,
                                    double gamma) {
  if (name == "example1") return example1(beta);
  if (name == "example2") return example2(beta, gamma);
  std::string known;
  for (const auto& entry : registered_problems()) {
    if (!known.empty()) known += ", ";
    known += entry;
  }
  throw std::invalid_argument("unknown problem '" + name +
                              "'; registered problems: " + known);
}

std::vector<std::string> registered_problems() {
  return {"example1", "example2"};
}

}  // namespace distfrac
