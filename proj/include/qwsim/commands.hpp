#ifndef QWSIM_COMMANDS_HPP
#define QWSIM_COMMANDS_HPP

#include <filesystem>
#include <string>

#include "qwsim/ctqw.hpp"
#include "qwsim/instance.hpp"

// Command implementations behind the CLI verbs. Each produces the full text
// artifact for one command so the binary stays a thin argument-parsing shell
// and tests can drive commands directly.

namespace qwsim::cmd {

enum class Engine { Dtqw, Ctqw, CtqwRegular };

Engine engine_from_name(const std::string& name); // "dtqw" | "ctqw" | "ctqw-regular"

// Gamma basis table, clique/pair edge lists and the two percolations.
std::string expand_report(const InstanceSpec& spec);

// H_C, H_S and H = H_C + H_S, dense row-major, 17 significant digits.
std::string hamiltonian_export(const InstanceSpec& spec);

// CSV trace: step,kind,index,re,im with amp and prob rows per step.
// steps_override < 0 keeps the spec's step count.
std::string run_trace_csv(const InstanceSpec& spec, Engine engine,
                          int steps_override = -1);

// CSV schedule: time,phase,active_edges.
std::string schedule_csv(const InstanceSpec& spec, Engine engine);

struct CompareResult {
  int steps = 0;
  double threshold = 0;
  double max_state_distance = 0;
  double max_tv_distance = 0;
  int worst_step = 0;        // step with the largest state distance
  int first_exceed_step = -1; // first step beyond threshold, -1 if none
  bool regular_mode_checked = false; // ctqw-regular also compared
  bool pass = false;
};

// Runs the DTQW and the CTQW engines on the same instance and measures the
// worst per-step state distance and total-variation distance. When the
// instance is regular with Grover coins everywhere, the regular-Grover engine
// is compared as well. perturb_eps != 0 is a test hook that injects a
// Hermitian perturbation into the coin Hamiltonian before the CTQW runs.
CompareResult compare_engines(const InstanceSpec& spec, double threshold,
                              double perturb_eps = 0.0);

std::string compare_report(const CompareResult& result);

// Comparison threshold: tol::engine_match unless the QWSIM_COMPARE_TOL
// environment variable carries a positive number.
double compare_threshold_from_env();

// Writes via a temp file in the target directory followed by a rename.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

std::string format_double(double value); // %.17g

} // namespace qwsim::cmd

#endif
