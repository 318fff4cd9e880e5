#include <cmath>
#include <numbers>

#include <doctest.h>

#include "qwsim/coined.hpp"
#include "qwsim/eig.hpp"
#include "qwsim/error.hpp"
#include "support/generators.hpp"

using namespace qwsim;
using namespace qwsim::testsupport;

namespace {

Graph single_edge() { return Graph(2, std::vector<std::pair<int, int>>{{0, 1}}); }

CoinAssignment all_of(const Graph& g, const CoinSpec& spec) {
  CoinAssignment coins;
  for (int v = 0; v < g.vertex_count(); ++v) coins.insert({v, spec});
  return coins;
}

// Fourier coin F[j,k] = omega^{jk} / sqrt(N) with omega = e^{2 pi i / N}.
// Unitary but not Hermitian; its spectrum contains complex eigenvalues.
ComplexMatrix fourier_coin(std::size_t n) {
  ComplexMatrix f(n, n);
  const double norm = 1.0 / std::sqrt(static_cast<double>(n));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      const double angle = 2.0 * std::numbers::pi * static_cast<double>(j * k) / n;
      f(j, k) = norm * std::exp(cplx(0.0, angle));
    }
  return f;
}

} // namespace

TEST_CASE("shift operator on the single edge is the swap") {
  const ExpandedGraph x = expand(single_edge());
  CHECK(max_abs_diff(shift_operator(x), make_matrix({{0, 1}, {1, 0}})) == 0);
}

TEST_CASE("shift operator on the triangle pairs the gamma indices") {
  const ExpandedGraph x = expand(Graph::complete(3));
  const ComplexMatrix s = shift_operator(x);
  for (auto [a, b] : {std::pair<int, int>{0, 2}, {1, 4}, {3, 5}}) {
    CHECK(s(a, b) == cplx(1));
    CHECK(s(b, a) == cplx(1));
  }
  std::size_t nonzero = 0;
  for (const cplx& e : s.entries())
    if (e != cplx{}) ++nonzero;
  CHECK(nonzero == 6);
}

TEST_CASE("shift operator is an exact involution") {
  auto rng = make_rng(301);
  for (int trial = 0; trial < 10; ++trial) {
    const ExpandedGraph x = expand(random_connected_graph(rng, 2, 8, 12));
    const ComplexMatrix s = shift_operator(x);
    CHECK(max_abs_diff(matmul(s, s), ComplexMatrix::identity(s.rows())) == 0);
  }
}

TEST_CASE("coin blocks of the presets") {
  CHECK(max_abs_diff(coin_block(CoinSpec::search(), 2),
                     cplx(-1) * ComplexMatrix::identity(2)) == 0);

  const ComplexMatrix grover3 = coin_block(CoinSpec::grover(), 3);
  CHECK(max_abs_diff(grover3, make_matrix({{-1.0 / 3, 2.0 / 3, 2.0 / 3},
                                           {2.0 / 3, -1.0 / 3, 2.0 / 3},
                                           {2.0 / 3, 2.0 / 3, -1.0 / 3}})) < 1e-15);

  const double r = 1.0 / std::sqrt(2.0);
  const ComplexMatrix h2 = coin_block(CoinSpec::hadamard2(), 2);
  CHECK(max_abs_diff(h2, make_matrix({{r, r}, {r, -r}})) < 1e-15);

  // The 4-dimensional Hadamard coin factorizes as H2 (x) H2.
  const ComplexMatrix h4 = coin_block(CoinSpec::hadamard4(), 4);
  CHECK(max_abs_diff(h4, kronecker(h2, h2)) < 1e-14);
}

TEST_CASE("coin blocks validate degrees and orthonormality") {
  CHECK_THROWS_AS(coin_block(CoinSpec::hadamard2(), 3), QwError);
  CHECK_THROWS_AS(coin_block(CoinSpec::hadamard4(), 2), QwError);

  StateVector a = make_state({1, 0});
  StateVector b = make_state({0.9, 0.1});
  try {
    CoinSpec::reflection({a, b});
    FAIL("expected NonOrthonormalAlphas");
  } catch (const QwError& e) {
    CHECK(e.code() == ErrorCode::NonOrthonormalAlphas);
  }

  // A valid reflection spec still has to match the vertex degree.
  const CoinSpec spec = CoinSpec::reflection({make_state({1, 0})});
  CHECK_THROWS_AS(coin_block(spec, 3), QwError);
}

TEST_CASE("coin blocks are reflections with spectrum in {+1,-1}") {
  auto rng = make_rng(311);
  for (int trial = 0; trial < 40; ++trial) {
    std::uniform_int_distribution<int> dim(1, 8);
    const int d = dim(rng);
    const CoinSpec spec = random_coin(rng, d);
    const ComplexMatrix c = coin_block(spec, d);
    CHECK(hermiticity_deviation(c) < 1e-12);
    CHECK(max_abs_diff(matmul(c, c), ComplexMatrix::identity(d)) < 1e-12);
    for (double lambda : hermitian_eig(c).eigenvalues)
      CHECK(std::abs(std::abs(lambda) - 1.0) < 1e-10);
  }
}

TEST_CASE("the all-ones vector is a +1 eigenvector of Grover blocks") {
  for (int d : {1, 2, 3, 5, 8}) {
    const ComplexMatrix c = coin_block(CoinSpec::grover(), d);
    const StateVector ones = StateVector::uniform(d);
    CHECK(distance(apply(c, ones), ones) < 1e-14);
  }
}

TEST_CASE("coin operator assembles vertex-major blocks") {
  const ExpandedGraph x = expand(Graph::complete(3));
  const ComplexMatrix all_search = coin_operator(x, all_of(x.base, CoinSpec::search()));
  CHECK(max_abs_diff(all_search, cplx(-1) * ComplexMatrix::identity(6)) == 0);

  const ExpandedGraph edge = expand(single_edge());
  const ComplexMatrix c = coin_operator(edge, all_of(edge.base, CoinSpec::grover()));
  CHECK(max_abs_diff(c, ComplexMatrix::identity(2)) == 0);

  CoinAssignment missing;
  missing.insert({0, CoinSpec::grover()});
  try {
    coin_operator(x, missing);
    FAIL("expected MissingCoin");
  } catch (const QwError& e) {
    CHECK(e.code() == ErrorCode::MissingCoin);
  }
}

TEST_CASE("coin operator vanishes outside the vertex blocks") {
  auto rng = make_rng(331);
  const Graph g = random_connected_graph(rng, 4, 7, 10);
  const ExpandedGraph x = expand(g);
  const ComplexMatrix c = coin_operator(x, random_coins(rng, g));
  for (int v = 0; v < g.vertex_count(); ++v) {
    const std::size_t off = x.gamma.block_offset(v);
    const std::size_t d = x.gamma.block_size(v);
    for (std::size_t row = off; row < off + d; ++row)
      for (std::size_t col = 0; col < c.cols(); ++col)
        if (col < off || col >= off + d) CHECK(c(row, col) == cplx{});
  }
}

TEST_CASE("dtqw propagator special cases and unitarity") {
  const ExpandedGraph x = expand(Graph::complete(3));
  const ComplexMatrix u = dtqw_propagator(x, all_of(x.base, CoinSpec::search()));
  CHECK(max_abs_diff(u, cplx(-1) * shift_operator(x)) == 0);

  const ExpandedGraph edge = expand(single_edge());
  CHECK(max_abs_diff(dtqw_propagator(edge, all_of(edge.base, CoinSpec::grover())),
                     make_matrix({{0, 1}, {1, 0}})) == 0);

  auto rng = make_rng(337);
  for (int trial = 0; trial < 10; ++trial) {
    const Graph g = random_connected_graph(rng, 2, 8, 12);
    const ExpandedGraph xg = expand(g);
    CHECK(unitarity_deviation(dtqw_propagator(xg, random_coins(rng, g))) < 1e-12);
  }
}

TEST_CASE("dtqw_run trajectories") {
  const ExpandedGraph edge = expand(single_edge());
  const CoinAssignment coins = all_of(edge.base, CoinSpec::grover());
  const StateVector psi0 = StateVector::basis(2, 0);

  const WalkTrajectory still = dtqw_run(edge, coins, psi0, 0);
  REQUIRE(still.states.size() == 1);
  CHECK(distance(still.states[0], psi0) == 0);

  const WalkTrajectory swap = dtqw_run(edge, coins, psi0, 2);
  REQUIRE(swap.states.size() == 3);
  CHECK(distance(swap.states[0], make_state({1, 0})) < 1e-15);
  CHECK(distance(swap.states[1], make_state({0, 1})) < 1e-15);
  CHECK(distance(swap.states[2], make_state({1, 0})) < 1e-15);

  auto rng = make_rng(347);
  const Graph g = random_connected_graph(rng, 3, 8, 12);
  const ExpandedGraph x = expand(g);
  const WalkTrajectory long_run =
      dtqw_run(x, random_coins(rng, g), random_state(rng, x.gamma.size()), 100);
  for (const StateVector& psi : long_run.states)
    CHECK(std::abs(psi.norm() - 1.0) < 1e-9);
}

TEST_CASE("dtqw_run validates its inputs") {
  const ExpandedGraph edge = expand(single_edge());
  const CoinAssignment coins = all_of(edge.base, CoinSpec::grover());
  CHECK_THROWS_AS(dtqw_run(edge, coins, StateVector::basis(3, 0), 1), QwError);
  StateVector unnormalized(2);
  unnormalized[0] = 0.5;
  CHECK_THROWS_AS(dtqw_run(edge, coins, unnormalized, 1), QwError);
}

TEST_CASE("vertex distributions aggregate the gamma blocks") {
  auto rng = make_rng(353);
  const Graph g = random_connected_graph(rng, 3, 8, 12);
  const ExpandedGraph x = expand(g);
  const std::size_t dim = x.gamma.size();

  StateVector uniform(dim);
  for (std::size_t i = 0; i < dim; ++i) uniform[i] = 1.0 / std::sqrt(double(dim));
  const std::vector<double> p = vertex_distribution(x, uniform);
  for (int v = 0; v < g.vertex_count(); ++v)
    CHECK(p[v] == doctest::Approx(g.degree(v) / double(dim)).epsilon(1e-12));

  const StateVector basis = StateVector::basis(dim, x.gamma.index_of(g.edges()[0].u, 0));
  const std::vector<double> indicator = vertex_distribution(x, basis);
  for (int v = 0; v < g.vertex_count(); ++v)
    CHECK(indicator[v] == (v == g.edges()[0].u ? 1.0 : 0.0));

  for (int trial = 0; trial < 10; ++trial) {
    const std::vector<double> q = vertex_distribution(x, random_state(rng, dim));
    double total = 0;
    for (double pv : q) {
      CHECK(pv >= 0);
      total += pv;
    }
    CHECK(std::abs(total - 1.0) < 1e-10);
  }
}

TEST_CASE("non-reflection coins are rejected") {
  try {
    reflection_from_matrix(fourier_coin(4));
    FAIL("expected NonReflectionCoin");
  } catch (const QwError& e) {
    CHECK(e.code() == ErrorCode::NonReflectionCoin);
  }
}

TEST_CASE("reflection_from_matrix round-trips reflections") {
  auto rng = make_rng(359);
  for (int trial = 0; trial < 20; ++trial) {
    std::uniform_int_distribution<std::size_t> dim(1, 6);
    const std::size_t d = dim(rng);
    const ComplexMatrix r = random_reflection(rng, d);
    const CoinSpec spec = reflection_from_matrix(r);
    CHECK(max_abs_diff(coin_block(spec, static_cast<int>(d)), r) < 1e-10);
  }
}
