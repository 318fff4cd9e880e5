#include "qwsim/complex_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qwsim/error.hpp"
#include "qwsim/tolerances.hpp"

namespace qwsim {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::NotInvolution: return "NotInvolution";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::InvalidGraph: return "InvalidGraph";
    case ErrorCode::UnknownEdgeId: return "UnknownEdgeId";
    case ErrorCode::IsolatedVertex: return "IsolatedVertex";
    case ErrorCode::NonOrthonormalAlphas: return "NonOrthonormalAlphas";
    case ErrorCode::MissingCoin: return "MissingCoin";
    case ErrorCode::NonReflectionCoin: return "NonReflectionCoin";
    case ErrorCode::NotRegular: return "NotRegular";
    case ErrorCode::NotAllGrover: return "NotAllGrover";
    case ErrorCode::InvalidState: return "InvalidState";
    case ErrorCode::SpecParse: return "SpecParse";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

StateVector StateVector::basis(std::size_t dim, std::size_t k) {
  StateVector v(dim);
  v[k] = 1.0;
  return v;
}

StateVector StateVector::uniform(std::size_t dim) {
  StateVector v(dim);
  const double a = 1.0 / std::sqrt(static_cast<double>(dim));
  for (std::size_t i = 0; i < dim; ++i) v[i] = a;
  return v;
}

double StateVector::norm() const {
  double s = 0;
  for (const cplx& a : amp_) s += std::norm(a);
  return std::sqrt(s);
}

void StateVector::normalize() {
  const double n = norm();
  if (n == 0.0) fail(ErrorCode::InvalidState, "cannot normalize the zero vector");
  for (cplx& a : amp_) a /= n;
}

namespace {

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b,
                        const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    fail(ErrorCode::DimensionMismatch,
         std::string(op) + ": shapes " + std::to_string(a.rows()) + "x" +
             std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) +
             "x" + std::to_string(b.cols()));
}

} // namespace

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows())
    fail(ErrorCode::DimensionMismatch,
         "matmul: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
             " times " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  ComplexMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const cplx aik = a(i, k);
      if (aik == cplx{}) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

ComplexMatrix adjoint(const ComplexMatrix& a) {
  ComplexMatrix t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) t(k, i) = std::conj(a(i, k));
  return t;
}

StateVector apply(const ComplexMatrix& a, const StateVector& v) {
  if (a.cols() != v.dim())
    fail(ErrorCode::DimensionMismatch,
         "apply: matrix cols " + std::to_string(a.cols()) + " vs vector dim " +
             std::to_string(v.dim()));
  StateVector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    cplx s = 0;
    for (std::size_t k = 0; k < a.cols(); ++k) s += a(i, k) * v[k];
    out[i] = s;
  }
  return out;
}

double max_norm(const ComplexMatrix& a) {
  double m = 0;
  for (const cplx& e : a.entries()) m = std::max(m, std::abs(e));
  return m;
}

double frobenius_norm(const ComplexMatrix& a) {
  double s = 0;
  for (const cplx& e : a.entries()) s += std::norm(e);
  return std::sqrt(s);
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b, "add");
  ComplexMatrix c = a;
  for (std::size_t i = 0; i < c.entries().size(); ++i)
    c.entries()[i] += b.entries()[i];
  return c;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b, "subtract");
  ComplexMatrix c = a;
  for (std::size_t i = 0; i < c.entries().size(); ++i)
    c.entries()[i] -= b.entries()[i];
  return c;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  return matmul(a, b);
}

ComplexMatrix operator*(cplx s, const ComplexMatrix& a) {
  ComplexMatrix c = a;
  for (cplx& e : c.entries()) e *= s;
  return c;
}

ComplexMatrix outer(const StateVector& a, const StateVector& b) {
  ComplexMatrix m(a.dim(), b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t k = 0; k < b.dim(); ++k) m(i, k) = a[i] * std::conj(b[k]);
  return m;
}

cplx inner(const StateVector& a, const StateVector& b) {
  if (a.dim() != b.dim())
    fail(ErrorCode::DimensionMismatch, "inner: dims " + std::to_string(a.dim()) +
                                           " vs " + std::to_string(b.dim()));
  cplx s = 0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

double distance(const StateVector& a, const StateVector& b) {
  if (a.dim() != b.dim())
    fail(ErrorCode::DimensionMismatch, "distance: dims " + std::to_string(a.dim()) +
                                           " vs " + std::to_string(b.dim()));
  double s = 0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += std::norm(a[i] - b[i]);
  return std::sqrt(s);
}

ComplexMatrix block(const ComplexMatrix& m, std::size_t r0, std::size_t c0,
                    std::size_t rows, std::size_t cols) {
  if (r0 + rows > m.rows() || c0 + cols > m.cols())
    fail(ErrorCode::DimensionMismatch, "block: range exceeds matrix shape");
  ComplexMatrix b(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < cols; ++k) b(i, k) = m(r0 + i, c0 + k);
  return b;
}

void set_block(ComplexMatrix& m, std::size_t r0, std::size_t c0,
               const ComplexMatrix& b) {
  if (r0 + b.rows() > m.rows() || c0 + b.cols() > m.cols())
    fail(ErrorCode::DimensionMismatch, "set_block: range exceeds matrix shape");
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t k = 0; k < b.cols(); ++k) m(r0 + i, c0 + k) = b(i, k);
}

double hermiticity_deviation(const ComplexMatrix& m) {
  double d = 0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t k = i; k < m.cols(); ++k)
      d = std::max(d, std::abs(m(i, k) - std::conj(m(k, i))));
  return d;
}

double unitarity_deviation(const ComplexMatrix& m) {
  return max_abs_diff(matmul(adjoint(m), m), ComplexMatrix::identity(m.cols()));
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b, "max_abs_diff");
  double d = 0;
  for (std::size_t i = 0; i < a.entries().size(); ++i)
    d = std::max(d, std::abs(a.entries()[i] - b.entries()[i]));
  return d;
}

bool is_hermitian(const ComplexMatrix& m) {
  return m.is_square() && hermiticity_deviation(m) <= tol::hermitian;
}

bool is_unitary(const ComplexMatrix& m) {
  return m.is_square() && unitarity_deviation(m) <= tol::unitary;
}

} // namespace qwsim
