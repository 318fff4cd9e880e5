#ifndef QWSIM_COINED_HPP
#define QWSIM_COINED_HPP

#include <map>
#include <vector>

#include "qwsim/complex_matrix.hpp"
#include "qwsim/expansion.hpp"

namespace qwsim {

enum class CoinKind { Grover, Search, Hadamard2, Hadamard4, Reflection };

// Per-vertex reflection coin: a named preset or an explicit orthonormal set
// {|alpha_k>} defining 2 sum_k |alpha_k><alpha_k| - I. An empty set is the
// search coin -I.
class CoinSpec {
 public:
  static CoinSpec grover() { return CoinSpec(CoinKind::Grover); }
  static CoinSpec search() { return CoinSpec(CoinKind::Search); }
  static CoinSpec hadamard2() { return CoinSpec(CoinKind::Hadamard2); }
  static CoinSpec hadamard4() { return CoinSpec(CoinKind::Hadamard4); }
  static CoinSpec reflection(std::vector<StateVector> alphas);

  CoinKind kind() const { return kind_; }
  // Only meaningful for CoinKind::Reflection.
  const std::vector<StateVector>& alphas() const { return alphas_; }

 private:
  explicit CoinSpec(CoinKind kind) : kind_(kind) {}

  CoinKind kind_;
  std::vector<StateVector> alphas_;
};

using CoinAssignment = std::map<int, CoinSpec>;

// The orthonormal set defining the coin on a degree-d vertex. Validates the
// spec against d (presets have fixed dimensions, reflection alphas must be
// pairwise orthonormal d-dimensional states).
std::vector<StateVector> coin_alphas(const CoinSpec& spec, int degree);

// d x d reflection 2 sum_k |alpha_k><alpha_k| - I.
ComplexMatrix coin_block(const CoinSpec& spec, int degree);

// Permutation swapping the two members of each Gamma_j; S^2 = I.
ComplexMatrix shift_operator(const ExpandedGraph& x);

// Direct sum of per-vertex coin blocks in the vertex-major basis order.
ComplexMatrix coin_operator(const ExpandedGraph& x, const CoinAssignment& coins);

// U = S * C.
ComplexMatrix dtqw_propagator(const ExpandedGraph& x, const CoinAssignment& coins);

// Decomposes an explicitly given coin matrix into a Reflection spec (the +1
// eigenspace becomes the alpha set). Anything that is not a reflection --
// in particular any coin with a complex eigenvalue, such as Fourier coins --
// is rejected with NonReflectionCoin.
CoinSpec reflection_from_matrix(const ComplexMatrix& coin);

enum class StepSemantics { DtqwStep, CtqwFullPeriod };

struct WalkTrajectory {
  std::vector<StateVector> states;              // index = step, 0..steps
  std::vector<std::vector<double>> vertex_probs; // per-vertex distribution of G
  StepSemantics step_semantics = StepSemantics::DtqwStep;
  // Diagnostic only: states at coin/shift phase boundaries when a CTQW run
  // is asked to record them. No DTQW equivalence is claimed for these.
  std::vector<StateVector> phase_states;
};

// psi_t = U^t psi_0 for t = 0..steps.
WalkTrajectory dtqw_run(const ExpandedGraph& x, const CoinAssignment& coins,
                        const StateVector& psi0, int steps);

// p_v = sum over (v,j) in Gamma^v of |<v,j|psi>|^2.
std::vector<double> vertex_distribution(const ExpandedGraph& x,
                                        const StateVector& psi);

} // namespace qwsim

#endif
