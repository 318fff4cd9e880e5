#include <cmath>
#include <numbers>

#include <doctest.h>

#include "qwsim/complex_matrix.hpp"
#include "qwsim/eig.hpp"
#include "qwsim/error.hpp"
#include "qwsim/graph.hpp"
#include "support/generators.hpp"

using namespace qwsim;
using namespace qwsim::testsupport;

namespace {
constexpr double kPi = std::numbers::pi;
const cplx kI{0.0, 1.0};
} // namespace

TEST_CASE("hermitian_eig on a diagonal matrix is the identity decomposition") {
  const ComplexMatrix h = make_matrix({{0, 0, 0}, {0, 3, 0}, {0, 0, 3}});
  const EigenDecomposition eig = hermitian_eig(h);
  CHECK(eig.eigenvalues[0] == doctest::Approx(0).epsilon(1e-14));
  CHECK(eig.eigenvalues[1] == doctest::Approx(3).epsilon(1e-14));
  CHECK(eig.eigenvalues[2] == doctest::Approx(3).epsilon(1e-14));
  CHECK(max_abs_diff(eig.eigenvectors, ComplexMatrix::identity(3)) < 1e-14);
}

TEST_CASE("complete-graph Laplacian spectrum is {0, N, ..., N}") {
  const EigenDecomposition eig = hermitian_eig(laplacian(Graph::complete(4)));
  CHECK(std::abs(eig.eigenvalues[0]) < 1e-12);
  for (int k = 1; k < 4; ++k) CHECK(std::abs(eig.eigenvalues[k] - 4.0) < 1e-12);
}

TEST_CASE("2x2 eigenvalues match the hand-solved characteristic polynomial") {
  // [[1,-1],[-1,1]]: trace 2, determinant 0, so the eigenvalues are 0 and 2.
  const ComplexMatrix h = make_matrix({{1, -1}, {-1, 1}});
  const EigenDecomposition eig = hermitian_eig(h);
  CHECK(std::abs(eig.eigenvalues[0]) < 1e-14);
  CHECK(std::abs(eig.eigenvalues[1] - 2.0) < 1e-14);
}

TEST_CASE("hermitian_eig rejects non-Hermitian input") {
  const ComplexMatrix m = make_matrix({{0, 1}, {0, 0}});
  CHECK_THROWS_WITH_AS(hermitian_eig(m), doctest::Contains("Hermiticity"), QwError);
  try {
    hermitian_eig(m);
  } catch (const QwError& e) {
    CHECK(e.code() == ErrorCode::NotHermitian);
  }
}

TEST_CASE("expm_scaled at theta=0 is the identity") {
  auto rng = make_rng(11);
  const ComplexMatrix h = random_hermitian(rng, 5);
  CHECK(max_abs_diff(expm_scaled(h, 0.0), ComplexMatrix::identity(5)) < 1e-12);
}

TEST_CASE("expm_scaled reproduces the swap from its generator") {
  const ComplexMatrix h = make_matrix({{1, -1}, {-1, 1}});
  const ComplexMatrix expected = make_matrix({{0, 1}, {1, 0}});
  CHECK(max_abs_diff(expm_scaled(h, kPi / 2.0), expected) < 1e-12);
}

TEST_CASE("expm_scaled of the K_3 Laplacian at pi/3 is the uniform reflection") {
  const ComplexMatrix expected = make_matrix({{-1.0 / 3, 2.0 / 3, 2.0 / 3},
                                              {2.0 / 3, -1.0 / 3, 2.0 / 3},
                                              {2.0 / 3, 2.0 / 3, -1.0 / 3}});
  CHECK(max_abs_diff(expm_scaled(laplacian(Graph::complete(3)), kPi / 3.0), expected) <
        1e-12);
}

TEST_CASE("reflection_propagator_oracle returns involutions unchanged") {
  CHECK(max_abs_diff(reflection_propagator_oracle(ComplexMatrix::identity(2)),
                     ComplexMatrix::identity(2)) == 0);
  const ComplexMatrix swap = make_matrix({{0, 1}, {1, 0}});
  CHECK(max_abs_diff(reflection_propagator_oracle(swap), swap) == 0);
  const ComplexMatrix uniform = make_matrix({{-1.0 / 3, 2.0 / 3, 2.0 / 3},
                                             {2.0 / 3, -1.0 / 3, 2.0 / 3},
                                             {2.0 / 3, 2.0 / 3, -1.0 / 3}});
  CHECK(max_abs_diff(reflection_propagator_oracle(uniform), uniform) == 0);
}

TEST_CASE("reflection_propagator_oracle rejects non-involutions") {
  const ComplexMatrix h = make_matrix({{1, -1}, {-1, 1}});
  try {
    reflection_propagator_oracle(h);
    FAIL("expected NotInvolution");
  } catch (const QwError& e) {
    CHECK(e.code() == ErrorCode::NotInvolution);
  }
}

TEST_CASE("matmul, adjoint, apply and max_norm basics") {
  auto rng = make_rng(17);
  const ComplexMatrix a = random_hermitian(rng, 4);
  CHECK(max_abs_diff(matmul(ComplexMatrix::identity(4), a), a) == 0);

  const ComplexMatrix m = make_matrix({{0, kI}, {0, 0}});
  const ComplexMatrix expected = make_matrix({{0, 0}, {-kI, 0}});
  CHECK(max_abs_diff(adjoint(m), expected) == 0);

  const StateVector swapped = apply(make_matrix({{0, 1}, {1, 0}}), make_state({1, 0}));
  CHECK(std::abs(swapped[0]) == 0);
  CHECK(std::abs(swapped[1] - cplx(1)) == 0);

  CHECK(max_norm(m) == 1.0);
  CHECK_THROWS_AS(matmul(m, ComplexMatrix::identity(3)), QwError);
  CHECK_THROWS_AS(apply(m, StateVector(3)), QwError);
}

TEST_CASE("apply preserves the norm under unitaries") {
  auto rng = make_rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 2 + trial % 7;
    const ComplexMatrix u = expm_scaled(random_hermitian(rng, n), 0.7);
    const StateVector v = random_state(rng, n);
    CHECK(std::abs(apply(u, v).norm() - 1.0) < 1e-10);
  }
}

TEST_CASE("expm_scaled is unitary and satisfies the semigroup law") {
  auto rng = make_rng(31);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
  std::uniform_int_distribution<std::size_t> dim(1, 12);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = dim(rng);
    const ComplexMatrix h = random_hermitian(rng, n);
    const double t1 = angle(rng);
    const double t2 = angle(rng);
    const ComplexMatrix u1 = expm_scaled(h, t1);
    CHECK(unitarity_deviation(u1) < 1e-10);
    CHECK(max_abs_diff(matmul(u1, expm_scaled(h, t2)), expm_scaled(h, t1 + t2)) < 1e-9);
  }
}

TEST_CASE("pi/2 exponential of I - R equals the reflection itself") {
  auto rng = make_rng(37);
  std::uniform_int_distribution<std::size_t> dim(1, 8);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = dim(rng);
    const ComplexMatrix r = random_reflection(rng, n);
    const ComplexMatrix generator = ComplexMatrix::identity(n) - r;
    CHECK(max_abs_diff(expm_scaled(generator, kPi / 2.0),
                       reflection_propagator_oracle(r)) < 1e-9);
  }
}

TEST_CASE("eigendecomposition reconstructs the input") {
  auto rng = make_rng(41);
  std::uniform_int_distribution<std::size_t> dim(1, 16);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = dim(rng);
    const ComplexMatrix h = random_hermitian(rng, n);
    const EigenDecomposition eig = hermitian_eig(h);
    CHECK(unitarity_deviation(eig.eigenvectors) < 1e-10);
    for (std::size_t k = 0; k + 1 < n; ++k)
      CHECK(eig.eigenvalues[k] <= eig.eigenvalues[k + 1]);

    ComplexMatrix scaled = eig.eigenvectors;
    for (std::size_t col = 0; col < n; ++col)
      for (std::size_t row = 0; row < n; ++row)
        scaled(row, col) *= eig.eigenvalues[col];
    const ComplexMatrix rebuilt = matmul(scaled, adjoint(eig.eigenvectors));
    CHECK(max_abs_diff(rebuilt, h) < 1e-9 * std::max(1.0, max_norm(h)));
  }
}
