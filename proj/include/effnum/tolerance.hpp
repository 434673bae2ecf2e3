#pragma once

#include <cstddef>

// Numerical tolerances shared by all modules.
namespace effnum::tol {

/// Relative tolerance on the sum of probability/counting vectors and on the
/// norm of quantum states.
inline constexpr double norm = 1e-9;
/// Absolute slack for partial-sum dominance ties in cumulation comparisons.
inline constexpr double cmp = 1e-12;
/// Entries at or below this value count as zero in the support count.
inline constexpr double zero = 1e-12;
/// Per-element slack of axiom checks; multiplied by the vector length.
inline constexpr double axiom = 1e-12;
/// Smallest jump reported as a continuity violation.
inline constexpr double jump = 0.5;
/// Orthonormality, Hermiticity and eigen-reconstruction tolerances (relative).
inline constexpr double ortho = 1e-10;
inline constexpr double herm = 1e-10;
inline constexpr double eig = 1e-10;
/// Eigenvalue gaps below this fraction of the spectral range are degenerate.
inline constexpr double degen = 1e-8;
/// Riemann-sum normalization of grids sampled from analytic functions.
inline constexpr double cont_sampled = 1e-6;
/// Riemann-sum normalization of grids read from files.
inline constexpr double cont_file = 1e-9;
/// Rényi orders this close to 1 are evaluated as the Shannon limit.
inline constexpr double renyi_shannon = 1e-6;

}  // namespace effnum::tol
