#include "qwsim/instance.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "qwsim/error.hpp"
#include "qwsim/expansion.hpp"
#include "qwsim/tolerances.hpp"

namespace qwsim {

namespace {

using nlohmann::json;

[[noreturn]] void parse_fail(const std::string& field, const std::string& what) {
  fail(ErrorCode::SpecParse, "instance field '" + field + "': " + what);
}

cplx read_complex(const json& value, const std::string& field) {
  if (!value.is_array() || value.size() != 2 || !value[0].is_number() ||
      !value[1].is_number())
    parse_fail(field, "expected a [re, im] number pair");
  return {value[0].get<double>(), value[1].get<double>()};
}

StateVector read_state(const json& value, const std::string& field) {
  if (!value.is_array() || value.empty())
    parse_fail(field, "expected a non-empty list of [re, im] pairs");
  StateVector v(value.size());
  for (std::size_t i = 0; i < value.size(); ++i)
    v[i] = read_complex(value[i], field + "[" + std::to_string(i) + "]");
  return v;
}

CoinSpec read_coin(const json& value, const std::string& field) {
  if (value.is_string()) {
    const std::string name = value.get<std::string>();
    if (name == "grover") return CoinSpec::grover();
    if (name == "search") return CoinSpec::search();
    if (name == "hadamard2") return CoinSpec::hadamard2();
    if (name == "hadamard4") return CoinSpec::hadamard4();
    parse_fail(field, "unknown coin name '" + name +
                          "' (expected grover, search, hadamard2, hadamard4)");
  }
  if (value.is_object() && value.contains("reflection")) {
    const json& list = value["reflection"];
    if (!list.is_array()) parse_fail(field, "'reflection' must be a list of states");
    std::vector<StateVector> alphas;
    for (std::size_t i = 0; i < list.size(); ++i)
      alphas.push_back(read_state(list[i], field + ".reflection[" + std::to_string(i) + "]"));
    try {
      return CoinSpec::reflection(std::move(alphas));
    } catch (const QwError& e) {
      parse_fail(field, e.what());
    }
  }
  parse_fail(field, "expected a coin name string or {\"reflection\": [...]}");
}

} // namespace

InstanceSpec parse_instance(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text, nullptr, true, /*ignore_comments=*/true);
  } catch (const json::parse_error& e) {
    fail(ErrorCode::SpecParse, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) fail(ErrorCode::SpecParse, "instance document must be an object");

  if (!doc.contains("vertices") || !doc["vertices"].is_number_integer())
    parse_fail("vertices", "expected an integer");
  const int vertices = doc["vertices"].get<int>();

  if (!doc.contains("edges") || !doc["edges"].is_array())
    parse_fail("edges", "expected a list of [u, v] pairs");
  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 0; i < doc["edges"].size(); ++i) {
    const json& e = doc["edges"][i];
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer())
      parse_fail("edges[" + std::to_string(i) + "]", "expected an [u, v] integer pair");
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }

  Graph graph = [&]() {
    try {
      return Graph(vertices, edges);
    } catch (const QwError& e) {
      fail(ErrorCode::SpecParse, std::string("invalid graph: ") + e.what());
    }
  }();

  if (!doc.contains("coins") || !doc["coins"].is_object())
    parse_fail("coins", "expected an object mapping vertex ids to descriptors");
  CoinAssignment coins;
  for (const auto& [key, value] : doc["coins"].items()) {
    int v = -1;
    try {
      v = std::stoi(key);
    } catch (...) {
      parse_fail("coins", "key '" + key + "' is not a vertex id");
    }
    if (v < 0 || v >= vertices)
      parse_fail("coins", "vertex id " + key + " out of range");
    coins.insert({v, read_coin(value, "coins." + key)});
  }

  // Validate completeness and per-degree constraints up front.
  const GammaIndex gamma = gamma_basis(graph);
  for (int v = 0; v < vertices; ++v) {
    const auto it = coins.find(v);
    if (it == coins.end())
      fail(ErrorCode::MissingCoin, "no coin assigned to vertex " + std::to_string(v));
    coin_alphas(it->second, static_cast<int>(gamma.block_size(v)));
  }

  if (!doc.contains("steps") || !doc["steps"].is_number_integer())
    parse_fail("steps", "expected an integer");
  const int steps = doc["steps"].get<int>();
  if (steps < 0) parse_fail("steps", "must be >= 0");

  if (!doc.contains("initial")) parse_fail("initial", "missing");
  const json& initial = doc["initial"];
  StateVector psi0;
  std::optional<std::pair<int, int>> basis_form;
  if (initial.is_object() && initial.contains("basis")) {
    const json& b = initial["basis"];
    if (!b.is_array() || b.size() != 2 || !b[0].is_number_integer() ||
        !b[1].is_number_integer())
      parse_fail("initial.basis", "expected a [vertex, edge] integer pair");
    const int v = b[0].get<int>();
    const int j = b[1].get<int>();
    try {
      psi0 = StateVector::basis(gamma.size(), gamma.index_of(v, j));
    } catch (const QwError&) {
      parse_fail("initial.basis", "(" + std::to_string(v) + ", " + std::to_string(j) +
                                      ") is not a vertex-edge incidence pair");
    }
    basis_form = {v, j};
  } else if (initial.is_object() && initial.contains("amplitudes")) {
    psi0 = read_state(initial["amplitudes"], "initial.amplitudes");
    if (psi0.dim() != gamma.size())
      parse_fail("initial.amplitudes",
                 "dimension " + std::to_string(psi0.dim()) + " does not match 2|E| = " +
                     std::to_string(gamma.size()));
    const double norm = psi0.norm();
    if (std::abs(norm - 1.0) > tol::load_norm)
      parse_fail("initial.amplitudes",
                 "norm " + std::to_string(norm) + " deviates from 1 beyond tolerance");
    // Renormalize, but leave states that are already normalized to machine
    // precision untouched so that a save/load round trip is bit-exact.
    if (std::abs(norm - 1.0) > 1e-15) psi0.normalize();
  } else {
    parse_fail("initial", "expected {\"basis\": [v, j]} or {\"amplitudes\": [...]}");
  }

  return InstanceSpec{std::move(graph), std::move(coins), std::move(psi0),
                      basis_form, steps};
}

InstanceSpec load_instance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::Io, "cannot open instance file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

std::string instance_to_json(const InstanceSpec& spec) {
  json doc;
  doc["vertices"] = spec.graph.vertex_count();
  json edges = json::array();
  for (const Edge& e : spec.graph.edges()) edges.push_back({e.u, e.v});
  doc["edges"] = std::move(edges);

  json coins = json::object();
  for (const auto& [v, coin] : spec.coins) {
    json descriptor;
    switch (coin.kind()) {
      case CoinKind::Grover: descriptor = "grover"; break;
      case CoinKind::Search: descriptor = "search"; break;
      case CoinKind::Hadamard2: descriptor = "hadamard2"; break;
      case CoinKind::Hadamard4: descriptor = "hadamard4"; break;
      case CoinKind::Reflection: {
        json states = json::array();
        for (const StateVector& a : coin.alphas()) {
          json amps = json::array();
          for (std::size_t i = 0; i < a.dim(); ++i)
            amps.push_back({a[i].real(), a[i].imag()});
          states.push_back(std::move(amps));
        }
        descriptor = json{{"reflection", std::move(states)}};
        break;
      }
    }
    coins[std::to_string(v)] = std::move(descriptor);
  }
  doc["coins"] = std::move(coins);

  if (spec.initial_basis) {
    doc["initial"] = {{"basis", {spec.initial_basis->first, spec.initial_basis->second}}};
  } else {
    json amps = json::array();
    for (std::size_t i = 0; i < spec.initial.dim(); ++i)
      amps.push_back({spec.initial[i].real(), spec.initial[i].imag()});
    doc["initial"] = {{"amplitudes", std::move(amps)}};
  }
  doc["steps"] = spec.steps;
  return doc.dump(2) + "\n";
}

void save_instance(const InstanceSpec& spec, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) fail(ErrorCode::Io, "cannot write instance file " + path.string());
  out << instance_to_json(spec);
  if (!out) fail(ErrorCode::Io, "write failed for " + path.string());
}

} // namespace qwsim
