#ifndef QWSIM_CTQW_HPP
#define QWSIM_CTQW_HPP

#include <vector>

#include "qwsim/coined.hpp"
#include "qwsim/expansion.hpp"

namespace qwsim {

// Coin-step and shift-step Hamiltonians on the expanded graph. Evolving with
// each of them for time pi/2 reproduces the coin and shift operators.
struct HamiltonianPair {
  ComplexMatrix coin;  // block diagonal on the Gamma^v blocks
  ComplexMatrix shift; // Laplacian of the shift subgraph
};

// Block-diagonal Hamiltonian whose pi/2 propagator equals the coin operator.
// Per-vertex blocks: Grover vertices carry (2/d) times the clique Laplacian;
// one-term coins conjugate that by a unitary taking |s> to |alpha>; search
// vertices carry 2I; m-term coins are built from the completed basis
// transform applied to diag(0 x m, d x (d-m)), scaled by 2/d.
ComplexMatrix coin_hamiltonian(const ExpandedGraph& x, const CoinAssignment& coins);

// Laplacian of the shift subgraph; every Gamma_j carries a [[1,-1],[-1,1]] block.
ComplexMatrix shift_hamiltonian(const ExpandedGraph& x);

HamiltonianPair build_hamiltonians(const ExpandedGraph& x, const CoinAssignment& coins);

// H = coin_hamiltonian + shift_hamiltonian; the combined operator is exported
// for inspection, evolution always alternates the two parts.
ComplexMatrix full_hamiltonian(const ExpandedGraph& x, const CoinAssignment& coins);

struct CtqwOptions {
  // Record the state at every coin/shift boundary into phase_states.
  bool record_phase_boundaries = false;
};

// Percolated CTQW: per period, evolve with the coin Hamiltonian for pi/2
// (pair edges off), then with the shift Hamiltonian for pi/2 (clique edges
// off). States are recorded at period boundaries and match the DTQW step
// for step.
WalkTrajectory ctqw_run(const ExpandedGraph& x, const CoinAssignment& coins,
                        const StateVector& psi0, int steps,
                        const CtqwOptions& options = {});

// Two-phase evolution with explicitly supplied phase Hamiltonians and times.
// ctqw_run and the regular special case are thin wrappers over this; it also
// lets callers inject modified Hamiltonians (used by the compare test hook).
WalkTrajectory ctqw_run_with_hamiltonians(const ExpandedGraph& x,
                                          const ComplexMatrix& h_coin, double coin_time,
                                          const ComplexMatrix& h_shift, double shift_time,
                                          const StateVector& psi0, int steps,
                                          const CtqwOptions& options = {});

// Special case for d-regular graphs with Grover coins everywhere: both phase
// Hamiltonians are plain graph Laplacians of percolations of the expanded
// graph; the coin phase lasts pi/d, the shift phase pi/2.
WalkTrajectory ctqw_run_regular_grover(const ExpandedGraph& x,
                                       const StateVector& psi0, int steps,
                                       const CtqwOptions& options = {});

// Validates that `coins` assigns Grover everywhere, then runs the regular
// special case.
WalkTrajectory ctqw_run_regular_grover(const ExpandedGraph& x,
                                       const CoinAssignment& coins,
                                       const StateVector& psi0, int steps,
                                       const CtqwOptions& options = {});

enum class ScheduleMode { Weighted, RegularGrover };
enum class SchedulePhase { Coin, Shift, End };

struct ScheduleEntry {
  double time;              // switch time
  SchedulePhase phase;      // phase starting at `time`
  std::vector<int> active_edges; // edge ids of x.graph active from `time`
};

// The alternating clique-edge / pair-edge activation schedule with cumulative
// switch times. Weighted mode uses pi/2 + pi/2 periods; regular-Grover mode
// uses pi/d + pi/2 and requires a regular base graph.
std::vector<ScheduleEntry> percolation_schedule(const ExpandedGraph& x, int steps,
                                                ScheduleMode mode = ScheduleMode::Weighted);

} // namespace qwsim

#endif
