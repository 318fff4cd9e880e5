#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <doctest.h>

#include "qwsim/commands.hpp"
#include "qwsim/error.hpp"
#include "qwsim/tolerances.hpp"
#include "support/generators.hpp"

using namespace qwsim;
using namespace qwsim::testsupport;

namespace {

const std::filesystem::path kFixture =
    std::filesystem::path(QWSIM_FIXTURE_DIR) / "mixed_coins_example.json";

InstanceSpec single_edge_instance(int steps) {
  const Graph g(2, std::vector<std::pair<int, int>>{{0, 1}});
  CoinAssignment coins;
  coins.insert({0, CoinSpec::grover()});
  coins.insert({1, CoinSpec::grover()});
  return InstanceSpec{g, coins, StateVector::basis(2, 0), std::pair<int, int>{0, 0},
                      steps};
}

} // namespace

TEST_CASE("compare passes on the fixture and fails under the perturbation hook") {
  const InstanceSpec spec = load_instance(kFixture);

  const cmd::CompareResult ok = cmd::compare_engines(spec, tol::engine_match);
  CHECK(ok.pass);
  CHECK(ok.max_state_distance <= tol::engine_match);
  CHECK(ok.first_exceed_step == -1);
  CHECK_FALSE(ok.regular_mode_checked); // mixed coins, irregular graph
  CHECK(contains(cmd::compare_report(ok), "verdict PASS"));

  const cmd::CompareResult bad = cmd::compare_engines(spec, tol::engine_match, 1e-3);
  CHECK_FALSE(bad.pass);
  CHECK(bad.first_exceed_step >= 1);
  CHECK(contains(cmd::compare_report(bad), "verdict FAIL"));
  CHECK(contains(cmd::compare_report(bad), "first_exceed_step"));
}

TEST_CASE("compare also runs the regular engine when it applies") {
  const Graph k3 = Graph::complete(3);
  CoinAssignment coins;
  for (int v = 0; v < 3; ++v) coins.insert({v, CoinSpec::grover()});
  const GammaIndex gamma = gamma_basis(k3);
  auto rng = make_rng(601);
  const InstanceSpec spec{k3, coins, random_state(rng, gamma.size()), std::nullopt, 25};
  const cmd::CompareResult result = cmd::compare_engines(spec, tol::engine_match);
  CHECK(result.pass);
  CHECK(result.regular_mode_checked);
  CHECK(contains(cmd::compare_report(result), "ctqw-regular"));
}

TEST_CASE("run traces carry the swap dynamics") {
  const InstanceSpec spec = single_edge_instance(2);
  const std::string csv = cmd::run_trace_csv(spec, cmd::Engine::Dtqw);

  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  CHECK(line == "step,kind,index,re,im");
  std::vector<std::string> lines;
  while (std::getline(in, line)) lines.push_back(line);
  // Per step: 2 amp rows + 2 prob rows; steps 0..2.
  REQUIRE(lines.size() == 12);
  CHECK(lines[2] == "0,prob,0,1,");
  CHECK(lines[3] == "0,prob,1,0,");
  CHECK(lines[6] == "1,prob,0,0,");
  CHECK(lines[7] == "1,prob,1,1,");
  CHECK(lines[10] == "2,prob,0,1,");
  CHECK(lines[11] == "2,prob,1,0,");

  // The two engines produce identical step labels and near-identical rows.
  const std::string ctqw_csv = cmd::run_trace_csv(spec, cmd::Engine::Ctqw);
  CHECK(ctqw_csv.substr(0, 18) == csv.substr(0, 18));
}

TEST_CASE("run respects the steps override") {
  const InstanceSpec spec = single_edge_instance(2);
  const std::string csv = cmd::run_trace_csv(spec, cmd::Engine::Dtqw, 0);
  std::istringstream in(csv);
  std::string line;
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  CHECK(rows == 1 + 4); // header + one step record
}

TEST_CASE("expand report lists the gamma table and percolations") {
  const InstanceSpec spec = load_instance(kFixture);
  const std::string report = cmd::expand_report(spec);
  CHECK(contains(report, "expanded_vertices 12"));
  CHECK(contains(report, "# gamma index vertex edge"));
  CHECK(contains(report, "# clique_edges 11")); // 1+3+1+6+0
  CHECK(contains(report, "# pair_edges 6"));
  CHECK(contains(report, "# coin_subgraph_edges 11"));
  CHECK(contains(report, "# shift_subgraph_edges 6"));
}

TEST_CASE("hamiltonian export is dense full-precision text") {
  const InstanceSpec spec = single_edge_instance(1);
  const std::string text = cmd::hamiltonian_export(spec);
  CHECK(contains(text, "# matrix H_C 2 2"));
  CHECK(contains(text, "# matrix H_S 2 2"));
  CHECK(contains(text, "# matrix H 2 2"));
  CHECK(contains(text, "1,0 -1,0")); // shift Laplacian row
  // Determinism across invocations.
  CHECK(cmd::hamiltonian_export(spec) == text);
}

TEST_CASE("schedule export") {
  const InstanceSpec spec = single_edge_instance(2);
  const std::string csv = cmd::schedule_csv(spec, cmd::Engine::Ctqw);
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  CHECK(line == "time,phase,active_edges");
  std::vector<std::string> lines;
  while (std::getline(in, line)) lines.push_back(line);
  REQUIRE(lines.size() == 5); // two periods + end marker
  CHECK(lines[0] == "0,coin,0");
  CHECK(lines[4].substr(lines[4].size() - 6) == ",end,0");
  CHECK_THROWS_AS(cmd::schedule_csv(spec, cmd::Engine::Dtqw), QwError);
}

TEST_CASE("engine names") {
  CHECK(cmd::engine_from_name("dtqw") == cmd::Engine::Dtqw);
  CHECK(cmd::engine_from_name("ctqw") == cmd::Engine::Ctqw);
  CHECK(cmd::engine_from_name("ctqw-regular") == cmd::Engine::CtqwRegular);
  CHECK_THROWS_AS(cmd::engine_from_name("szegedy"), QwError);
}

TEST_CASE("the comparison threshold can be overridden by environment") {
  CHECK(cmd::compare_threshold_from_env() == tol::engine_match);
  setenv("QWSIM_COMPARE_TOL", "1e-6", 1);
  CHECK(cmd::compare_threshold_from_env() == 1e-6);
  setenv("QWSIM_COMPARE_TOL", "not-a-number", 1);
  CHECK(cmd::compare_threshold_from_env() == tol::engine_match);
  unsetenv("QWSIM_COMPARE_TOL");
}

TEST_CASE("atomic writes land the full content") {
  const auto path = std::filesystem::temp_directory_path() / "qwsim_atomic.txt";
  cmd::write_file_atomic(path, "payload\n");
  std::ifstream in(path);
  std::string content((std::istreambuf_iterator<char>(in)),
                      std::istreambuf_iterator<char>());
  CHECK(content == "payload\n");
  CHECK_FALSE(std::filesystem::exists(path.string() + ".tmp"));
  std::filesystem::remove(path);
}
