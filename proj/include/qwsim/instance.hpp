#ifndef QWSIM_INSTANCE_HPP
#define QWSIM_INSTANCE_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <utility>

#include "qwsim/coined.hpp"
#include "qwsim/graph.hpp"

namespace qwsim {

// A walk instance as described by a spec file: unit-weight graph, per-vertex
// coins, a normalized initial state on the Gamma basis, and a step count.
struct InstanceSpec {
  Graph graph;
  CoinAssignment coins;
  StateVector initial; // dim 2|E|, normalized
  // Set when the file gave the initial state as a basis pair (v, j);
  // preserved so a save/load round trip reproduces the file form.
  std::optional<std::pair<int, int>> initial_basis;
  int steps = 0;
};

// Parses the JSON instance document. Accepts // comments. Field layout:
//   vertices: int
//   edges:    [[u, v], ...]            (edge ids are list positions)
//   coins:    {"<vertex>": descriptor}  descriptor = "grover" | "search" |
//             "hadamard2" | "hadamard4" | {"reflection": [alpha, ...]}
//             with alpha = [[re, im], ...]
//   initial:  {"basis": [v, j]} or {"amplitudes": [[re, im], ...]}
//   steps:    int >= 0
InstanceSpec parse_instance(const std::string& json_text);
InstanceSpec load_instance(const std::filesystem::path& path);

std::string instance_to_json(const InstanceSpec& spec);
void save_instance(const InstanceSpec& spec, const std::filesystem::path& path);

} // namespace qwsim

#endif
