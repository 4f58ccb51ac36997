#include "distfrac/stencil.hpp"

#include <stdexcept>

#include "distfrac/gamma.hpp"

namespace distfrac {

RieszStencil build_stencil(double order, std::size_t max_offset) {
  if (!(order > 1.0 && order <= 2.0)) {
    throw std::invalid_argument("build_stencil: order must lie in (1, 2]");
  }
  if (max_offset < 1) {
    throw std::invalid_argument("build_stencil: max_offset must be >= 1");
  }
  RieszStencil stencil;
  stencil.order = order;
  stencil.g.resize(max_offset + 1);
  const double g1 = gamma_fn(0.5 * order + 1.0);
  stencil.g[0] = gamma_fn(order + 1.0) / (g1 * g1);
  for (std::size_t k = 1; k <= max_offset; ++k) {
    stencil.g[k] = (1.0 - (order + 1.0) / (0.5 * order + static_cast<double>(k))) *
                   stencil.g[k - 1];
  }
  return stencil;
}

}  // namespace distfrac
