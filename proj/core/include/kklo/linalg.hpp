#pragma once

#include "kklo/matrix.hpp"

#include <cstddef>
#include <vector>

namespace kklo {

/// LU factorization with partial pivoting, stored packed (L unit lower,
/// U upper) plus the row permutation. Throws NumericError when a pivot
/// magnitude falls below 1e-12.
struct LuFactors {
    Matrix lu;
    std::vector<std::size_t> perm;
};

LuFactors lu_factor(const Matrix& m);
Vec lu_solve(const LuFactors& f, const Vec& rhs);

/// Inverse of a square, well-conditioned matrix via LU with partial
/// pivoting. Residual ||m*inv - I||_max stays below 1e-10 for
/// well-conditioned desk-scale inputs.
Matrix mat_inverse(const Matrix& m);

/// Largest singular value via power iteration on m^T m (or m m^T,
/// whichever is smaller), started from the normalized all-ones vector with
/// a deterministic perturbation on stagnation. Converges to relative
/// tolerance 1e-9; throws NumericError after 10000 iterations without
/// convergence.
double spectral_norm(const Matrix& m);

/// Solve A P + P A^T + Q = 0 for symmetric P via the Kronecker-vectorized
/// linear system. A must be Hurwitz and Q symmetric; a singular vectorized
/// system (eigenvalue pair summing to zero) raises NumericError.
Matrix solve_lyapunov(const Matrix& a, const Matrix& q);

/// Exact Hurwitz test at desk scale: characteristic polynomial via
/// Faddeev-LeVerrier, then the Routh-Hurwitz criterion.
bool is_hurwitz(const Matrix& a);

}  // namespace kklo
