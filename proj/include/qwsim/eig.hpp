#ifndef QWSIM_EIG_HPP
#define QWSIM_EIG_HPP

#include <vector>

#include "qwsim/complex_matrix.hpp"

namespace qwsim {

struct EigenDecomposition {
  std::vector<double> eigenvalues; // ascending
  ComplexMatrix eigenvectors;      // orthonormal columns, order matches
};

// Eigendecomposition of a Hermitian matrix via cyclic Jacobi annihilation.
// Input deviating from Hermiticity by more than tol::hermitian is rejected;
// smaller deviations are symmetrized away as (H + H^dagger)/2.
EigenDecomposition hermitian_eig(const ComplexMatrix& h);

// e^{-i theta H} = V diag(e^{-i theta lambda_k}) V^dagger.
ComplexMatrix expm_scaled(const ComplexMatrix& h, double theta);

// Closed-form counterpart of expm_scaled on involutions:
// exp(-i (pi/2) (I - R)) = R for any Hermitian R with R^2 = I.
// Validates the involution property and returns R itself; serves as an
// independent oracle for the spectral propagator on coin/shift blocks.
ComplexMatrix reflection_propagator_oracle(const ComplexMatrix& r);

} // namespace qwsim

#endif
