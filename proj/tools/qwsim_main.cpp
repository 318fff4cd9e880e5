// Command-line front end: expand instances, export Hamiltonians, run either
// walk engine, compare the engines, and emit percolation schedules.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "qwsim/commands.hpp"
#include "qwsim/error.hpp"
#include "qwsim/instance.hpp"

namespace {

void emit(const std::string& content, const std::string& out_path) {
  if (out_path.empty())
    std::cout << content;
  else
    qwsim::cmd::write_file_atomic(out_path, content);
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"flip-flop coined quantum walks and their exact continuous-time"
               " simulation on percolated expanded graphs"};
  app.require_subcommand(1);

  std::string spec_path;
  std::string out_path;
  std::string engine_name = "dtqw";
  std::string schedule_engine = "ctqw";
  int steps_override = -1;
  double perturb_eps = 0.0;

  CLI::App* cmd_expand = app.add_subcommand("expand", "report the expanded graph");
  cmd_expand->add_option("--spec", spec_path, "instance file")->required();
  cmd_expand->add_option("--out", out_path, "output path (default stdout)");

  CLI::App* cmd_hamiltonian =
      app.add_subcommand("hamiltonian", "export H_C, H_S and H = H_C + H_S");
  cmd_hamiltonian->add_option("--spec", spec_path, "instance file")->required();
  cmd_hamiltonian->add_option("--out", out_path, "output path (default stdout)");

  CLI::App* cmd_run = app.add_subcommand("run", "run one engine and write a trace");
  cmd_run->add_option("--spec", spec_path, "instance file")->required();
  cmd_run->add_option("--out", out_path, "output path (default stdout)");
  cmd_run->add_option("--engine", engine_name, "dtqw | ctqw | ctqw-regular")
      ->capture_default_str();
  cmd_run->add_option("--steps", steps_override, "override the instance step count")
      ->check(CLI::NonNegativeNumber);

  CLI::App* cmd_compare =
      app.add_subcommand("compare", "run both engines and report the deviation");
  cmd_compare->add_option("--spec", spec_path, "instance file")->required();
  cmd_compare->add_option("--out", out_path, "output path (default stdout)");
  cmd_compare
      ->add_option("--perturb", perturb_eps,
                   "test hook: Hermitian perturbation of the coin Hamiltonian")
      ->group(""); // hidden from help

  CLI::App* cmd_schedule =
      app.add_subcommand("schedule", "emit the percolation switch schedule");
  cmd_schedule->add_option("--spec", spec_path, "instance file")->required();
  cmd_schedule->add_option("--out", out_path, "output path (default stdout)");
  cmd_schedule->add_option("--engine", schedule_engine, "ctqw | ctqw-regular")
      ->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    const qwsim::InstanceSpec spec = qwsim::load_instance(spec_path);

    if (cmd_expand->parsed()) {
      emit(qwsim::cmd::expand_report(spec), out_path);
    } else if (cmd_hamiltonian->parsed()) {
      emit(qwsim::cmd::hamiltonian_export(spec), out_path);
    } else if (cmd_run->parsed()) {
      const auto engine = qwsim::cmd::engine_from_name(engine_name);
      emit(qwsim::cmd::run_trace_csv(spec, engine, steps_override), out_path);
    } else if (cmd_compare->parsed()) {
      const double threshold = qwsim::cmd::compare_threshold_from_env();
      const auto result = qwsim::cmd::compare_engines(spec, threshold, perturb_eps);
      emit(qwsim::cmd::compare_report(result), out_path);
      if (!result.pass) {
        std::cerr << "error[CompareFailed]: engines deviate beyond threshold at step "
                  << result.first_exceed_step << "\n";
        return 1;
      }
    } else if (cmd_schedule->parsed()) {
      const auto engine = qwsim::cmd::engine_from_name(schedule_engine);
      emit(qwsim::cmd::schedule_csv(spec, engine), out_path);
    }
  } catch (const qwsim::QwError& e) {
    std::cerr << "error[" << qwsim::error_code_name(e.code()) << "]: " << e.what()
              << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error[Internal]: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
