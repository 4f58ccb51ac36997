#pragma once

#include <stdexcept>

namespace distfrac {

/// Dense materialization or direct solve requested above the configured cap.
struct cap_exceeded_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Iterative solver failed to converge at some time step.
struct solver_failure_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A preconditioner or operator turned out singular (near-zero eigenvalue).
struct singular_operator_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A matrix expected to be symmetric positive definite is not.
struct not_spd_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace distfrac
