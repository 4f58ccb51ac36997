#pragma once

#include <cstddef>
#include <vector>

namespace distfrac {

/// Symmetric half of the fractional centred-difference stencil for a Riesz
/// derivative of the given order: g[k] is the coefficient at offsets ±k.
/// g[0] >= 0 and every other entry is <= 0.
struct RieszStencil {
  double order = 0.0;      // in (1, 2]
  std::vector<double> g;   // g[0..max_offset]
};

/// g[0] from the closed form Γ(order+1)/Γ²(order/2+1); the tail through the
/// ratio recurrence, which never evaluates Γ at non-positive arguments.
RieszStencil build_stencil(double order, std::size_t max_offset);

}  // namespace distfrac
