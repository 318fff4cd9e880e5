#include "qwsim/eig.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "qwsim/error.hpp"
#include "qwsim/tolerances.hpp"

namespace qwsim {

namespace {

double offdiag_frobenius(const ComplexMatrix& a) {
  double s = 0;
  for (std::size_t i = 0; i + 1 < a.rows(); ++i)
    for (std::size_t k = i + 1; k < a.cols(); ++k) s += 2.0 * std::norm(a(i, k));
  return std::sqrt(s);
}

} // namespace

EigenDecomposition hermitian_eig(const ComplexMatrix& h) {
  if (!h.is_square())
    fail(ErrorCode::DimensionMismatch, "hermitian_eig: matrix is not square");
  const std::size_t n = h.rows();
  const double dev = hermiticity_deviation(h);
  if (dev > tol::hermitian)
    fail(ErrorCode::NotHermitian,
         "hermitian_eig: Hermiticity deviation " + std::to_string(dev));

  // Symmetrize to absorb assembly roundoff, then run cyclic Jacobi sweeps.
  ComplexMatrix a = cplx(0.5) * (h + adjoint(h));
  ComplexMatrix v = ComplexMatrix::identity(n);
  const double stop = tol::jacobi_offdiag_factor * frobenius_norm(a);

  int sweep = 0;
  while (offdiag_frobenius(a) > stop) {
    if (sweep++ >= tol::jacobi_max_sweeps)
      fail(ErrorCode::NoConvergence,
           "hermitian_eig: no convergence after " +
               std::to_string(tol::jacobi_max_sweeps) + " sweeps");
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const cplx apq = a(p, q);
        const double mag = std::abs(apq);
        if (mag < 1e-300) continue;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        // Unitary pivot G = Phase * JacobiRotation annihilating a(p,q):
        // G(p,p)=c, G(p,q)=s, G(q,p)=-w*s, G(q,q)=w*c with w = conj(apq)/|apq|.
        const cplx w = std::conj(apq) / mag;
        const double tau = (aqq - app) / (2.0 * mag);
        const double t =
            (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::hypot(1.0, tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        for (std::size_t k = 0; k < n; ++k) { // A <- A G
          const cplx akp = a(k, p);
          const cplx akq = a(k, q);
          a(k, p) = c * akp - w * s * akq;
          a(k, q) = s * akp + w * c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) { // A <- G^dagger A
          const cplx apk = a(p, k);
          const cplx aqk = a(q, k);
          a(p, k) = c * apk - std::conj(w) * s * aqk;
          a(q, k) = s * apk + std::conj(w) * c * aqk;
        }
        for (std::size_t k = 0; k < n; ++k) { // V <- V G
          const cplx vkp = v(k, p);
          const cplx vkq = v(k, q);
          v(k, p) = c * vkp - w * s * vkq;
          v(k, q) = s * vkp + w * c * vkq;
        }
        a(p, q) = 0;
        a(q, p) = 0;
        a(p, p) = cplx(a(p, p).real(), 0);
        a(q, q) = cplx(a(q, q).real(), 0);
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t k) {
    return a(i, i).real() < a(k, k).real();
  });

  EigenDecomposition out;
  out.eigenvalues.resize(n);
  out.eigenvectors = ComplexMatrix(n, n);
  for (std::size_t col = 0; col < n; ++col) {
    const std::size_t src = order[col];
    out.eigenvalues[col] = a(src, src).real();
    for (std::size_t row = 0; row < n; ++row)
      out.eigenvectors(row, col) = v(row, src);
  }
  return out;
}

ComplexMatrix expm_scaled(const ComplexMatrix& h, double theta) {
  const EigenDecomposition eig = hermitian_eig(h);
  const std::size_t n = h.rows();
  // V diag(e^{-i theta lambda}) applied as column scaling, then times V^dagger.
  ComplexMatrix scaled = eig.eigenvectors;
  for (std::size_t col = 0; col < n; ++col) {
    const cplx phase = std::exp(cplx(0.0, -theta * eig.eigenvalues[col]));
    for (std::size_t row = 0; row < n; ++row) scaled(row, col) *= phase;
  }
  return matmul(scaled, adjoint(eig.eigenvectors));
}

ComplexMatrix reflection_propagator_oracle(const ComplexMatrix& r) {
  if (!r.is_square())
    fail(ErrorCode::DimensionMismatch,
         "reflection_propagator_oracle: matrix is not square");
  const double dev = hermiticity_deviation(r);
  if (dev > tol::hermitian)
    fail(ErrorCode::NotHermitian,
         "reflection_propagator_oracle: Hermiticity deviation " +
             std::to_string(dev));
  const double inv_dev =
      max_abs_diff(matmul(r, r), ComplexMatrix::identity(r.rows()));
  if (inv_dev > tol::involution)
    fail(ErrorCode::NotInvolution,
         "reflection_propagator_oracle: R^2 deviates from I by " +
             std::to_string(inv_dev));
  return r;
}

} // namespace qwsim
