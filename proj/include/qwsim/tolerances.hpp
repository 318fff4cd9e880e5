#ifndef QWSIM_TOLERANCES_HPP
#define QWSIM_TOLERANCES_HPP

// All numeric tolerances used by the library live here so that tests and
// acceptance checks can reference the exact same constants.

namespace qwsim::tol {

// Max-entry deviation |M - M^dagger| accepted before an input is rejected
// as non-Hermitian. Deviations below this are symmetrized away.
inline constexpr double hermitian = 1e-12;

// Max-entry deviation of U^dagger U from the identity for the unitary check.
inline constexpr double unitary = 1e-10;

// Max-entry deviation of R^2 from the identity for reflections/involutions.
inline constexpr double involution = 1e-10;

// Pairwise orthonormality of user-supplied coin states.
inline constexpr double orthonormal = 1e-10;

// Norm-1 requirement on states fed into evolution routines.
inline constexpr double state_norm = 1e-10;

// Jacobi sweep stop: off-diagonal Frobenius norm <= factor * ||H||_F.
inline constexpr double jacobi_offdiag_factor = 1e-14;
inline constexpr int jacobi_max_sweeps = 100;

// Gram-Schmidt completion: candidates with residual below this are skipped.
inline constexpr double gram_schmidt_residual = 1e-8;

// Instance files: accepted deviation of the initial-state norm from 1
// before loading fails; afterwards the state is renormalized exactly.
inline constexpr double load_norm = 1e-8;

// Cross-engine comparison threshold (DTQW vs CTQW trajectories).
inline constexpr double engine_match = 1e-9;

} // namespace qwsim::tol

#endif
