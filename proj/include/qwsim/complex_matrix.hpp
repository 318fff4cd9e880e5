#ifndef QWSIM_COMPLEX_MATRIX_HPP
#define QWSIM_COMPLEX_MATRIX_HPP

#include <complex>
#include <cstddef>
#include <vector>

namespace qwsim {

using cplx = std::complex<double>;

// Dense complex matrix, row-major. The universal carrier for operators,
// Hamiltonians and propagators; sizes in this project stay small, so no
// attempt is made at sparse storage.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}

  static ComplexMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  cplx& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const cplx& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  const std::vector<cplx>& entries() const { return entries_; }
  std::vector<cplx>& entries() { return entries_; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cplx> entries_;
};

// Column vector of probability amplitudes.
class StateVector {
 public:
  StateVector() = default;
  explicit StateVector(std::size_t dim) : amp_(dim) {}
  explicit StateVector(std::vector<cplx> amplitudes) : amp_(std::move(amplitudes)) {}

  static StateVector basis(std::size_t dim, std::size_t k);
  static StateVector uniform(std::size_t dim);

  std::size_t dim() const { return amp_.size(); }
  cplx& operator[](std::size_t i) { return amp_[i]; }
  const cplx& operator[](std::size_t i) const { return amp_[i]; }

  const std::vector<cplx>& amplitudes() const { return amp_; }

  double norm() const;
  // Divides by the current norm; throws InvalidState on the zero vector.
  void normalize();

 private:
  std::vector<cplx> amp_;
};

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix adjoint(const ComplexMatrix& a);
StateVector apply(const ComplexMatrix& a, const StateVector& v);
// Largest entry magnitude, max_{i,k} |a_ik|.
double max_norm(const ComplexMatrix& a);
double frobenius_norm(const ComplexMatrix& a);

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(cplx s, const ComplexMatrix& a);

// |a><b|
ComplexMatrix outer(const StateVector& a, const StateVector& b);
// <a|b>, antilinear in the first argument.
cplx inner(const StateVector& a, const StateVector& b);
// l2 distance ||a - b||.
double distance(const StateVector& a, const StateVector& b);

ComplexMatrix block(const ComplexMatrix& m, std::size_t r0, std::size_t c0,
                    std::size_t rows, std::size_t cols);
void set_block(ComplexMatrix& m, std::size_t r0, std::size_t c0,
               const ComplexMatrix& b);

// max_{i,k} |m_ik - conj(m_ki)|; infinity-style Hermiticity deviation.
double hermiticity_deviation(const ComplexMatrix& m);
// ||M^dagger M - I||_max
double unitarity_deviation(const ComplexMatrix& m);
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

bool is_hermitian(const ComplexMatrix& m);
bool is_unitary(const ComplexMatrix& m);

} // namespace qwsim

#endif
