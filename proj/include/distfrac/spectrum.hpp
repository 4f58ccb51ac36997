#pragma once

#include <vector>

#include "distfrac/dense.hpp"

namespace distfrac {

/// All eigenvalues of a symmetric matrix, ascending, via cyclic Jacobi
/// rotations driven to a relative off-diagonal norm below 1e-12. Throws
/// when the sweep cap is hit (pathological input).
std::vector<double> spectrum(const DenseMatrix& a);

/// Eigenvalues of P⁻¹A for SPD P, computed as the spectrum of the congruent
/// symmetric form L⁻¹AL⁻ᵀ with P = LLᵀ.
std::vector<double> precond_spectrum(const DenseMatrix& a,
                                     const DenseMatrix& p);

}  // namespace distfrac
