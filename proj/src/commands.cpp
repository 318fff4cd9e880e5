#include "qwsim/commands.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "qwsim/error.hpp"
#include "qwsim/tolerances.hpp"

namespace qwsim::cmd {

namespace {

const char* phase_name(SchedulePhase phase) {
  switch (phase) {
    case SchedulePhase::Coin: return "coin";
    case SchedulePhase::Shift: return "shift";
    case SchedulePhase::End: return "end";
  }
  return "?";
}

void append_matrix(std::ostringstream& out, const std::string& name,
                   const ComplexMatrix& m) {
  out << "# matrix " << name << ' ' << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) out << ' ';
      out << format_double(m(r, c).real()) << ',' << format_double(m(r, c).imag());
    }
    out << '\n';
  }
}

void append_edge_list(std::ostringstream& out, const std::string& name,
                      const Graph& g, const std::vector<int>& ids) {
  out << "# " << name << ' ' << ids.size() << '\n';
  for (int id : ids)
    for (const Edge& e : g.edges())
      if (e.id == id) out << id << ' ' << e.u << ' ' << e.v << '\n';
}

// Largest per-step state distance and total-variation distance between two
// trajectories of equal length.
struct TrajectoryGap {
  double max_state_distance = 0;
  double max_tv_distance = 0;
  int worst_step = 0;
};

TrajectoryGap trajectory_gap(const WalkTrajectory& a, const WalkTrajectory& b) {
  TrajectoryGap gap;
  for (std::size_t t = 0; t < a.states.size(); ++t) {
    const double dist = distance(a.states[t], b.states[t]);
    if (dist > gap.max_state_distance) {
      gap.max_state_distance = dist;
      gap.worst_step = static_cast<int>(t);
    }
    double tv = 0;
    for (std::size_t v = 0; v < a.vertex_probs[t].size(); ++v)
      tv += std::abs(a.vertex_probs[t][v] - b.vertex_probs[t][v]);
    gap.max_tv_distance = std::max(gap.max_tv_distance, 0.5 * tv);
  }
  return gap;
}

bool all_grover(const InstanceSpec& spec) {
  for (const auto& [v, coin] : spec.coins)
    if (coin.kind() != CoinKind::Grover) return false;
  return true;
}

bool is_regular(const Graph& g) {
  if (g.vertex_count() == 0) return true;
  const int d = g.degree(0);
  for (int v = 1; v < g.vertex_count(); ++v)
    if (g.degree(v) != d) return false;
  return true;
}

} // namespace

std::string format_double(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

Engine engine_from_name(const std::string& name) {
  if (name == "dtqw") return Engine::Dtqw;
  if (name == "ctqw") return Engine::Ctqw;
  if (name == "ctqw-regular") return Engine::CtqwRegular;
  fail(ErrorCode::SpecParse,
       "unknown engine '" + name + "' (expected dtqw, ctqw, ctqw-regular)");
}

std::string expand_report(const InstanceSpec& spec) {
  const ExpandedGraph x = expand(spec.graph);
  std::ostringstream out;
  out << "# expansion vertices " << spec.graph.vertex_count() << " edges "
      << spec.graph.edges().size() << " expanded_vertices " << x.gamma.size() << '\n';
  out << "# gamma index vertex edge\n";
  for (std::size_t i = 0; i < x.gamma.size(); ++i)
    out << i << ' ' << x.gamma.entries()[i].vertex << ' '
        << x.gamma.entries()[i].edge << '\n';
  append_edge_list(out, "clique_edges", x.graph, x.clique_edges);
  append_edge_list(out, "pair_edges", x.graph, x.pair_edges);

  const Graph coin = coin_subgraph(x);
  const Graph shift = shift_subgraph(x);
  append_edge_list(out, "coin_subgraph_edges", coin, x.clique_edges);
  append_edge_list(out, "shift_subgraph_edges", shift, x.pair_edges);
  return out.str();
}

std::string hamiltonian_export(const InstanceSpec& spec) {
  const ExpandedGraph x = expand(spec.graph);
  const HamiltonianPair h = build_hamiltonians(x, spec.coins);
  std::ostringstream out;
  append_matrix(out, "H_C", h.coin);
  append_matrix(out, "H_S", h.shift);
  append_matrix(out, "H", h.coin + h.shift);
  return out.str();
}

std::string run_trace_csv(const InstanceSpec& spec, Engine engine, int steps_override) {
  const ExpandedGraph x = expand(spec.graph);
  const int steps = steps_override >= 0 ? steps_override : spec.steps;

  WalkTrajectory traj;
  switch (engine) {
    case Engine::Dtqw:
      traj = dtqw_run(x, spec.coins, spec.initial, steps);
      break;
    case Engine::Ctqw:
      traj = ctqw_run(x, spec.coins, spec.initial, steps);
      break;
    case Engine::CtqwRegular:
      traj = ctqw_run_regular_grover(x, spec.coins, spec.initial, steps);
      break;
  }

  std::ostringstream out;
  out << "step,kind,index,re,im\n";
  for (std::size_t t = 0; t < traj.states.size(); ++t) {
    const StateVector& psi = traj.states[t];
    for (std::size_t i = 0; i < psi.dim(); ++i)
      out << t << ",amp," << i << ',' << format_double(psi[i].real()) << ','
          << format_double(psi[i].imag()) << '\n';
    for (std::size_t v = 0; v < traj.vertex_probs[t].size(); ++v)
      out << t << ",prob," << v << ',' << format_double(traj.vertex_probs[t][v])
          << ",\n";
  }
  return out.str();
}

std::string schedule_csv(const InstanceSpec& spec, Engine engine) {
  if (engine == Engine::Dtqw)
    fail(ErrorCode::SpecParse, "schedule applies to the ctqw engines only");
  const ExpandedGraph x = expand(spec.graph);
  const ScheduleMode mode = engine == Engine::CtqwRegular
                                ? ScheduleMode::RegularGrover
                                : ScheduleMode::Weighted;
  const std::vector<ScheduleEntry> entries =
      percolation_schedule(x, spec.steps, mode);
  std::ostringstream out;
  out << "time,phase,active_edges\n";
  for (const ScheduleEntry& e : entries)
    out << format_double(e.time) << ',' << phase_name(e.phase) << ','
        << e.active_edges.size() << '\n';
  return out.str();
}

CompareResult compare_engines(const InstanceSpec& spec, double threshold,
                              double perturb_eps) {
  const ExpandedGraph x = expand(spec.graph);
  CompareResult result;
  result.steps = spec.steps;
  result.threshold = threshold;

  const WalkTrajectory reference = dtqw_run(x, spec.coins, spec.initial, spec.steps);

  HamiltonianPair h = build_hamiltonians(x, spec.coins);
  if (perturb_eps != 0.0 && h.coin.rows() >= 2) {
    // Test hook: Hermitian perturbation of the coin Hamiltonian.
    h.coin(0, 1) += perturb_eps;
    h.coin(1, 0) += perturb_eps;
  }
  const double half_pi = std::acos(-1.0) / 2.0;
  const WalkTrajectory ct = ctqw_run_with_hamiltonians(
      x, h.coin, half_pi, h.shift, half_pi, spec.initial, spec.steps);

  TrajectoryGap gap = trajectory_gap(reference, ct);

  if (is_regular(spec.graph) && all_grover(spec)) {
    result.regular_mode_checked = true;
    const WalkTrajectory reg =
        ctqw_run_regular_grover(x, spec.initial, spec.steps);
    const TrajectoryGap reg_gap = trajectory_gap(reference, reg);
    if (reg_gap.max_state_distance > gap.max_state_distance) {
      gap.max_state_distance = reg_gap.max_state_distance;
      gap.worst_step = reg_gap.worst_step;
    }
    gap.max_tv_distance = std::max(gap.max_tv_distance, reg_gap.max_tv_distance);
  }

  result.max_state_distance = gap.max_state_distance;
  result.max_tv_distance = gap.max_tv_distance;
  result.worst_step = gap.worst_step;
  result.pass = gap.max_state_distance <= threshold;
  if (!result.pass) {
    for (std::size_t t = 0; t < reference.states.size(); ++t) {
      if (distance(reference.states[t], ct.states[t]) > threshold) {
        result.first_exceed_step = static_cast<int>(t);
        break;
      }
    }
    if (result.first_exceed_step < 0) result.first_exceed_step = gap.worst_step;
  }
  return result;
}

std::string compare_report(const CompareResult& result) {
  std::ostringstream out;
  out << "steps " << result.steps << '\n';
  out << "engines dtqw ctqw" << (result.regular_mode_checked ? " ctqw-regular" : "")
      << '\n';
  out << "max_state_distance " << format_double(result.max_state_distance) << '\n';
  out << "max_tv_distance " << format_double(result.max_tv_distance) << '\n';
  out << "threshold " << format_double(result.threshold) << '\n';
  out << "worst_step " << result.worst_step << '\n';
  if (result.first_exceed_step >= 0)
    out << "first_exceed_step " << result.first_exceed_step << '\n';
  out << "verdict " << (result.pass ? "PASS" : "FAIL") << '\n';
  return out.str();
}

double compare_threshold_from_env() {
  if (const char* raw = std::getenv("QWSIM_COMPARE_TOL")) {
    char* end = nullptr;
    const double value = std::strtod(raw, &end);
    if (end != raw && value > 0) return value;
  }
  return tol::engine_match;
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) fail(ErrorCode::Io, "cannot open " + tmp.string() + " for writing");
    out << content;
    if (!out) fail(ErrorCode::Io, "write failed for " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) fail(ErrorCode::Io, "rename to " + path.string() + " failed: " + ec.message());
}

} // namespace qwsim::cmd
