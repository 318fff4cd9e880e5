#include "qwsim/ctqw.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qwsim/eig.hpp"
#include "qwsim/error.hpp"
#include "qwsim/tolerances.hpp"

namespace qwsim {

namespace {

constexpr double kPi = std::numbers::pi;

// Unitary taking the uniform state to (a phase multiple of) alpha: the
// reflection across the bisector of the two states, after aligning the
// phase of <s|alpha> to be real non-negative. The phase ambiguity cancels
// in the conjugation it is used for.
ComplexMatrix map_uniform_to(const StateVector& alpha) {
  const std::size_t d = alpha.dim();
  const StateVector s = StateVector::uniform(d);
  StateVector a = alpha;
  const cplx g = inner(s, alpha);
  if (std::abs(g) > 0) {
    const cplx phase = std::conj(g) / std::abs(g);
    for (std::size_t i = 0; i < d; ++i) a[i] *= phase;
  }
  if (distance(a, s) < 1e-12) return ComplexMatrix::identity(d);
  StateVector mid(d);
  for (std::size_t i = 0; i < d; ++i) mid[i] = s[i] + a[i];
  mid.normalize();
  ComplexMatrix w = cplx(2.0) * outer(mid, mid);
  for (std::size_t i = 0; i < d; ++i) w(i, i) -= 1.0;
  return w;
}

// Extends an orthonormal set to an orthonormal basis using standard basis
// candidates, skipping candidates whose residual is negligible.
std::vector<StateVector> complete_basis(const std::vector<StateVector>& alphas,
                                        std::size_t d) {
  std::vector<StateVector> cols = alphas;
  for (std::size_t k = 0; k < d && cols.size() < d; ++k) {
    StateVector cand = StateVector::basis(d, k);
    for (int pass = 0; pass < 2; ++pass) {
      for (const StateVector& c : cols) {
        const cplx g = inner(c, cand);
        for (std::size_t i = 0; i < d; ++i) cand[i] -= g * c[i];
      }
    }
    if (cand.norm() >= tol::gram_schmidt_residual) {
      cand.normalize();
      cols.push_back(std::move(cand));
    }
  }
  if (cols.size() != d)
    fail(ErrorCode::NonOrthonormalAlphas,
         "could not extend the coin states to an orthonormal basis");
  return cols;
}

// Hamiltonian block for an m-term reflection coin on a degree-d vertex:
// (2/d) * W~ diag(0 x m, d x (d-m)) W~^dagger.
ComplexMatrix m_term_block(const std::vector<StateVector>& alphas, std::size_t d) {
  const std::vector<StateVector> cols = complete_basis(alphas, d);
  ComplexMatrix wt(d, d);
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t row = 0; row < d; ++row) wt(row, k) = cols[k][row];
  ComplexMatrix diag(d, d);
  for (std::size_t k = alphas.size(); k < d; ++k) diag(k, k) = static_cast<double>(d);
  return cplx(2.0 / static_cast<double>(d)) * matmul(matmul(wt, diag), adjoint(wt));
}

void validate_run_inputs(const ExpandedGraph& x, const StateVector& psi0, int steps,
                         const char* op) {
  if (psi0.dim() != x.gamma.size())
    fail(ErrorCode::DimensionMismatch,
         std::string(op) + ": state dimension " + std::to_string(psi0.dim()) +
             " does not match 2|E| = " + std::to_string(x.gamma.size()));
  if (std::abs(psi0.norm() - 1.0) > tol::state_norm)
    fail(ErrorCode::InvalidState, std::string(op) + ": initial state is not normalized");
  if (steps < 0) fail(ErrorCode::InvalidState, std::string(op) + ": negative step count");
}

WalkTrajectory run_two_phase(const ExpandedGraph& x, const ComplexMatrix& h_coin,
                             double coin_time, const ComplexMatrix& h_shift,
                             double shift_time, const StateVector& psi0, int steps,
                             const CtqwOptions& options) {
  const ComplexMatrix u_coin = expm_scaled(h_coin, coin_time);
  const ComplexMatrix u_shift = expm_scaled(h_shift, shift_time);

  WalkTrajectory traj;
  traj.step_semantics = StepSemantics::CtqwFullPeriod;
  traj.states.reserve(steps + 1);
  traj.states.push_back(psi0);
  StateVector psi = psi0;
  for (int t = 0; t < steps; ++t) {
    StateVector mid = apply(u_coin, psi);
    if (options.record_phase_boundaries) traj.phase_states.push_back(mid);
    psi = apply(u_shift, mid);
    if (options.record_phase_boundaries) traj.phase_states.push_back(psi);
    traj.states.push_back(psi);
  }
  for (const StateVector& st : traj.states)
    traj.vertex_probs.push_back(vertex_distribution(x, st));
  return traj;
}

int regular_degree(const ExpandedGraph& x) {
  const std::size_t d = x.gamma.block_size(0);
  for (int v = 1; v < x.base.vertex_count(); ++v)
    if (x.gamma.block_size(v) != d)
      fail(ErrorCode::NotRegular,
           "graph is not regular: vertex 0 has degree " + std::to_string(d) +
               ", vertex " + std::to_string(v) + " has degree " +
               std::to_string(x.gamma.block_size(v)));
  return static_cast<int>(d);
}

} // namespace

ComplexMatrix coin_hamiltonian(const ExpandedGraph& x, const CoinAssignment& coins) {
  const std::size_t dim = x.gamma.size();
  const ComplexMatrix clique_laplacian = laplacian(coin_subgraph(x));
  ComplexMatrix h(dim, dim);
  for (int v = 0; v < x.base.vertex_count(); ++v) {
    const auto it = coins.find(v);
    if (it == coins.end())
      fail(ErrorCode::MissingCoin, "no coin assigned to vertex " + std::to_string(v));
    const std::size_t off = x.gamma.block_offset(v);
    const std::size_t d = x.gamma.block_size(v);
    const std::vector<StateVector> alphas = coin_alphas(it->second, static_cast<int>(d));

    ComplexMatrix b;
    if (it->second.kind() == CoinKind::Grover) {
      // Weighted clique Laplacian of the Gamma^v block.
      b = cplx(2.0 / static_cast<double>(d)) * block(clique_laplacian, off, off, d, d);
    } else if (alphas.empty()) {
      // Search coin: 2I.
      b = cplx(2.0) * ComplexMatrix::identity(d);
    } else if (alphas.size() == 1) {
      // One-term coin: conjugate the weighted clique Laplacian by a unitary
      // taking |s> to |alpha>.
      const ComplexMatrix base =
          cplx(2.0 / static_cast<double>(d)) * block(clique_laplacian, off, off, d, d);
      const ComplexMatrix w = map_uniform_to(alphas.front());
      b = matmul(matmul(w, base), adjoint(w));
    } else {
      b = m_term_block(alphas, d);
    }
    set_block(h, off, off, b);
  }
  return h;
}

ComplexMatrix shift_hamiltonian(const ExpandedGraph& x) {
  return laplacian(shift_subgraph(x));
}

HamiltonianPair build_hamiltonians(const ExpandedGraph& x, const CoinAssignment& coins) {
  return HamiltonianPair{coin_hamiltonian(x, coins), shift_hamiltonian(x)};
}

ComplexMatrix full_hamiltonian(const ExpandedGraph& x, const CoinAssignment& coins) {
  const HamiltonianPair h = build_hamiltonians(x, coins);
  return h.coin + h.shift;
}

WalkTrajectory ctqw_run(const ExpandedGraph& x, const CoinAssignment& coins,
                        const StateVector& psi0, int steps, const CtqwOptions& options) {
  validate_run_inputs(x, psi0, steps, "ctqw_run");
  const HamiltonianPair h = build_hamiltonians(x, coins);
  return run_two_phase(x, h.coin, kPi / 2.0, h.shift, kPi / 2.0, psi0, steps, options);
}

WalkTrajectory ctqw_run_with_hamiltonians(const ExpandedGraph& x,
                                          const ComplexMatrix& h_coin, double coin_time,
                                          const ComplexMatrix& h_shift, double shift_time,
                                          const StateVector& psi0, int steps,
                                          const CtqwOptions& options) {
  validate_run_inputs(x, psi0, steps, "ctqw_run_with_hamiltonians");
  return run_two_phase(x, h_coin, coin_time, h_shift, shift_time, psi0, steps, options);
}

WalkTrajectory ctqw_run_regular_grover(const ExpandedGraph& x, const StateVector& psi0,
                                       int steps, const CtqwOptions& options) {
  validate_run_inputs(x, psi0, steps, "ctqw_run_regular_grover");
  const int d = regular_degree(x);
  // Both phase Hamiltonians are plain Laplacians of percolations of the
  // expanded graph; only the evolution time distinguishes the coin phase.
  const ComplexMatrix h_coin = laplacian(coin_subgraph(x));
  const ComplexMatrix h_shift = laplacian(shift_subgraph(x));
  return run_two_phase(x, h_coin, kPi / d, h_shift, kPi / 2.0, psi0, steps, options);
}

WalkTrajectory ctqw_run_regular_grover(const ExpandedGraph& x, const CoinAssignment& coins,
                                       const StateVector& psi0, int steps,
                                       const CtqwOptions& options) {
  for (int v = 0; v < x.base.vertex_count(); ++v) {
    const auto it = coins.find(v);
    if (it == coins.end())
      fail(ErrorCode::MissingCoin, "no coin assigned to vertex " + std::to_string(v));
    if (it->second.kind() != CoinKind::Grover)
      fail(ErrorCode::NotAllGrover,
           "regular-Grover evolution requires Grover coins everywhere; vertex " +
               std::to_string(v) + " differs");
  }
  return ctqw_run_regular_grover(x, psi0, steps, options);
}

std::vector<ScheduleEntry> percolation_schedule(const ExpandedGraph& x, int steps,
                                                ScheduleMode mode) {
  if (steps < 0)
    fail(ErrorCode::InvalidState, "percolation_schedule: negative step count");
  double coin_time = kPi / 2.0;
  if (mode == ScheduleMode::RegularGrover) coin_time = kPi / regular_degree(x);

  std::vector<ScheduleEntry> schedule;
  double t = 0;
  for (int step = 0; step < steps; ++step) {
    schedule.push_back({t, SchedulePhase::Coin, x.clique_edges});
    t += coin_time;
    schedule.push_back({t, SchedulePhase::Shift, x.pair_edges});
    t += kPi / 2.0;
  }
  schedule.push_back({t, SchedulePhase::End, {}});
  return schedule;
}

} // namespace qwsim
