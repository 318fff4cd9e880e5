#include "qwsim/coined.hpp"

#include <cassert>
#include <cmath>
#include <string>

#include "qwsim/eig.hpp"
#include "qwsim/error.hpp"
#include "qwsim/tolerances.hpp"

namespace qwsim {

namespace {

StateVector hadamard2_alpha() {
  const double root2 = std::sqrt(2.0);
  const double denom = 2.0 * std::sqrt(2.0 + root2);
  StateVector a(2);
  a[0] = (2.0 + root2) / denom;
  a[1] = root2 / denom;
  return a;
}

std::vector<StateVector> hadamard4_alphas() {
  const double root6 = std::sqrt(6.0);
  const double root3 = std::sqrt(3.0);
  StateVector a0(4);
  a0[1] = 1.0 / root6;
  a0[2] = 1.0 / root6;
  a0[3] = -std::sqrt(2.0 / 3.0);
  StateVector a1(4);
  a1[0] = root3 / 2.0;
  a1[1] = 1.0 / (2.0 * root3);
  a1[2] = 1.0 / (2.0 * root3);
  a1[3] = 1.0 / (2.0 * root3);
  return {a0, a1};
}

void check_orthonormal(const std::vector<StateVector>& alphas) {
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    for (std::size_t k = i; k < alphas.size(); ++k) {
      const cplx g = inner(alphas[i], alphas[k]);
      const double expected = (i == k) ? 1.0 : 0.0;
      if (std::abs(g - expected) > tol::orthonormal)
        fail(ErrorCode::NonOrthonormalAlphas,
             "coin states " + std::to_string(i) + " and " + std::to_string(k) +
                 " deviate from orthonormality by " +
                 std::to_string(std::abs(g - expected)));
    }
  }
}

} // namespace

CoinSpec CoinSpec::reflection(std::vector<StateVector> alphas) {
  for (const StateVector& a : alphas)
    if (a.dim() != alphas.front().dim())
      fail(ErrorCode::DimensionMismatch,
           "reflection coin: alpha states have mixed dimensions");
  check_orthonormal(alphas);
  CoinSpec spec(CoinKind::Reflection);
  spec.alphas_ = std::move(alphas);
  return spec;
}

std::vector<StateVector> coin_alphas(const CoinSpec& spec, int degree) {
  if (degree < 1)
    fail(ErrorCode::DimensionMismatch, "coin space needs degree >= 1");
  const std::size_t d = static_cast<std::size_t>(degree);
  switch (spec.kind()) {
    case CoinKind::Grover:
      return {StateVector::uniform(d)};
    case CoinKind::Search:
      return {};
    case CoinKind::Hadamard2:
      if (degree != 2)
        fail(ErrorCode::DimensionMismatch,
             "hadamard2 coin requires degree 2, got " + std::to_string(degree));
      return {hadamard2_alpha()};
    case CoinKind::Hadamard4:
      if (degree != 4)
        fail(ErrorCode::DimensionMismatch,
             "hadamard4 coin requires degree 4, got " + std::to_string(degree));
      return hadamard4_alphas();
    case CoinKind::Reflection: {
      if (spec.alphas().size() > d)
        fail(ErrorCode::NonOrthonormalAlphas,
             "reflection coin: more states than the coin-space dimension");
      for (const StateVector& a : spec.alphas())
        if (a.dim() != d)
          fail(ErrorCode::DimensionMismatch,
               "reflection coin: alpha dimension " + std::to_string(a.dim()) +
                   " does not match degree " + std::to_string(degree));
      return spec.alphas();
    }
  }
  fail(ErrorCode::DimensionMismatch, "unknown coin kind");
}

ComplexMatrix coin_block(const CoinSpec& spec, int degree) {
  const std::vector<StateVector> alphas = coin_alphas(spec, degree);
  const std::size_t d = static_cast<std::size_t>(degree);
  ComplexMatrix c(d, d);
  for (std::size_t i = 0; i < d; ++i) c(i, i) = -1.0;
  for (const StateVector& a : alphas) c = c + cplx(2.0) * outer(a, a);

  if (spec.kind() == CoinKind::Hadamard2) {
    // Guard against sign/normalization slips in the alpha formula.
    [[maybe_unused]] const double r = 1.0 / std::sqrt(2.0);
    assert(std::abs(c(0, 0) - r) < 1e-12 && std::abs(c(0, 1) - r) < 1e-12 &&
           std::abs(c(1, 0) - r) < 1e-12 && std::abs(c(1, 1) + r) < 1e-12);
  }
  return c;
}

ComplexMatrix shift_operator(const ExpandedGraph& x) {
  const std::size_t dim = x.gamma.size();
  ComplexMatrix s(dim, dim);
  for (int j = 0; j < x.gamma.edge_count(); ++j) {
    const auto& pair = x.gamma.edge_pair(j);
    s(pair[0], pair[1]) = 1.0;
    s(pair[1], pair[0]) = 1.0;
  }
  return s;
}

ComplexMatrix coin_operator(const ExpandedGraph& x, const CoinAssignment& coins) {
  const std::size_t dim = x.gamma.size();
  ComplexMatrix c(dim, dim);
  for (int v = 0; v < x.base.vertex_count(); ++v) {
    const auto it = coins.find(v);
    if (it == coins.end())
      fail(ErrorCode::MissingCoin, "no coin assigned to vertex " + std::to_string(v));
    const std::size_t off = x.gamma.block_offset(v);
    const int d = static_cast<int>(x.gamma.block_size(v));
    set_block(c, off, off, coin_block(it->second, d));
  }
  return c;
}

ComplexMatrix dtqw_propagator(const ExpandedGraph& x, const CoinAssignment& coins) {
  return matmul(shift_operator(x), coin_operator(x, coins));
}

CoinSpec reflection_from_matrix(const ComplexMatrix& coin) {
  if (!coin.is_square())
    fail(ErrorCode::DimensionMismatch, "coin matrix is not square");
  const std::size_t d = coin.rows();
  if (hermiticity_deviation(coin) > tol::hermitian)
    fail(ErrorCode::NonReflectionCoin,
         "coin is not Hermitian, so its spectrum is not contained in {+1,-1}; "
         "only reflection coins are supported");
  if (max_abs_diff(matmul(coin, coin), ComplexMatrix::identity(d)) > tol::involution)
    fail(ErrorCode::NonReflectionCoin,
         "coin is not an involution; only reflection coins are supported");

  const EigenDecomposition eig = hermitian_eig(coin);
  std::vector<StateVector> alphas;
  for (std::size_t k = 0; k < d; ++k) {
    if (std::abs(eig.eigenvalues[k] - 1.0) <= tol::involution) {
      StateVector a(d);
      for (std::size_t row = 0; row < d; ++row) a[row] = eig.eigenvectors(row, k);
      alphas.push_back(std::move(a));
    } else if (std::abs(eig.eigenvalues[k] + 1.0) > tol::involution) {
      fail(ErrorCode::NonReflectionCoin,
           "coin eigenvalue " + std::to_string(eig.eigenvalues[k]) +
               " is neither +1 nor -1");
    }
  }
  return CoinSpec::reflection(std::move(alphas));
}

WalkTrajectory dtqw_run(const ExpandedGraph& x, const CoinAssignment& coins,
                        const StateVector& psi0, int steps) {
  if (psi0.dim() != x.gamma.size())
    fail(ErrorCode::DimensionMismatch,
         "dtqw_run: state dimension " + std::to_string(psi0.dim()) +
             " does not match 2|E| = " + std::to_string(x.gamma.size()));
  if (std::abs(psi0.norm() - 1.0) > tol::state_norm)
    fail(ErrorCode::InvalidState, "dtqw_run: initial state is not normalized");
  if (steps < 0) fail(ErrorCode::InvalidState, "dtqw_run: negative step count");

  const ComplexMatrix u = dtqw_propagator(x, coins);
  WalkTrajectory traj;
  traj.step_semantics = StepSemantics::DtqwStep;
  traj.states.reserve(steps + 1);
  traj.states.push_back(psi0);
  for (int t = 0; t < steps; ++t) traj.states.push_back(apply(u, traj.states.back()));
  for (const StateVector& psi : traj.states)
    traj.vertex_probs.push_back(vertex_distribution(x, psi));
  return traj;
}

std::vector<double> vertex_distribution(const ExpandedGraph& x,
                                        const StateVector& psi) {
  if (psi.dim() != x.gamma.size())
    fail(ErrorCode::DimensionMismatch,
         "vertex_distribution: state dimension " + std::to_string(psi.dim()) +
             " does not match 2|E| = " + std::to_string(x.gamma.size()));
  std::vector<double> p(x.base.vertex_count(), 0.0);
  for (int v = 0; v < x.base.vertex_count(); ++v) {
    const std::size_t off = x.gamma.block_offset(v);
    for (std::size_t i = 0; i < x.gamma.block_size(v); ++i)
      p[v] += std::norm(psi[off + i]);
  }
  return p;
}

} // namespace qwsim
