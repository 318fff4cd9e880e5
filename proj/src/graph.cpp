#include "qwsim/graph.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <tuple>

#include "qwsim/error.hpp"

namespace qwsim {

Graph::Graph(int vertex_count, const std::vector<std::pair<int, int>>& edges)
    : vertex_count_(vertex_count) {
  edges_.reserve(edges.size());
  int id = 0;
  for (const auto& [u, v] : edges) edges_.push_back({id++, u, v, 1.0});
  validate();
}

Graph::Graph(int vertex_count,
             const std::vector<std::tuple<int, int, double>>& edges)
    : vertex_count_(vertex_count) {
  edges_.reserve(edges.size());
  int id = 0;
  for (const auto& [u, v, w] : edges) edges_.push_back({id++, u, v, w});
  validate();
}

Graph::Graph(int vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  validate();
}

Graph Graph::complete(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, edges);
}

Graph Graph::cycle(int n) {
  if (n < 3) fail(ErrorCode::InvalidGraph, "cycle: need at least 3 vertices");
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u) edges.emplace_back(u, (u + 1) % n);
  return Graph(n, edges);
}

void Graph::validate() const {
  if (vertex_count_ < 0)
    fail(ErrorCode::InvalidGraph, "negative vertex count");
  std::set<int> ids;
  std::set<std::pair<int, int>> pairs;
  for (const Edge& e : edges_) {
    if (e.u < 0 || e.u >= vertex_count_ || e.v < 0 || e.v >= vertex_count_)
      fail(ErrorCode::InvalidGraph,
           "edge " + std::to_string(e.id) + " has endpoint out of range");
    if (e.u == e.v)
      fail(ErrorCode::InvalidGraph,
           "edge " + std::to_string(e.id) + " is a loop at vertex " +
               std::to_string(e.u));
    if (e.weight < 0)
      fail(ErrorCode::InvalidGraph,
           "edge " + std::to_string(e.id) + " has negative weight");
    if (!ids.insert(e.id).second)
      fail(ErrorCode::InvalidGraph, "duplicate edge id " + std::to_string(e.id));
    const auto key = std::minmax(e.u, e.v);
    if (!pairs.insert(key).second)
      fail(ErrorCode::InvalidGraph,
           "parallel edge between " + std::to_string(key.first) + " and " +
               std::to_string(key.second));
  }
}

int Graph::degree(int v) const {
  int d = 0;
  for (const Edge& e : edges_)
    if (e.u == v || e.v == v) ++d;
  return d;
}

double Graph::weighted_degree(int v) const {
  double d = 0;
  for (const Edge& e : edges_)
    if (e.u == v || e.v == v) d += e.weight;
  return d;
}

std::vector<int> Graph::incident_edges(int v) const {
  std::vector<int> ids;
  for (const Edge& e : edges_)
    if (e.u == v || e.v == v) ids.push_back(e.id);
  std::sort(ids.begin(), ids.end());
  return ids;
}

bool Graph::has_edge_id(int id) const {
  for (const Edge& e : edges_)
    if (e.id == id) return true;
  return false;
}

bool Graph::unit_weights() const {
  for (const Edge& e : edges_)
    if (e.weight != 1.0) return false;
  return true;
}

void Graph::set_vertex_labels(std::vector<std::string> labels) {
  if (static_cast<int>(labels.size()) != vertex_count_)
    fail(ErrorCode::InvalidGraph, "need one label per vertex");
  vertex_labels_ = std::move(labels);
}

ComplexMatrix adjacency(const Graph& g) {
  const std::size_t n = static_cast<std::size_t>(g.vertex_count());
  ComplexMatrix a(n, n);
  for (const Edge& e : g.edges()) {
    a(e.u, e.v) = e.weight;
    a(e.v, e.u) = e.weight;
  }
  return a;
}

ComplexMatrix laplacian(const Graph& g) {
  const std::size_t n = static_cast<std::size_t>(g.vertex_count());
  ComplexMatrix l(n, n);
  // Accumulate in edge-id order so the result does not depend on the stored
  // edge order.
  std::vector<Edge> sorted = g.edges();
  std::sort(sorted.begin(), sorted.end(),
            [](const Edge& a, const Edge& b) { return a.id < b.id; });
  for (const Edge& e : sorted) {
    l(e.u, e.v) -= e.weight;
    l(e.v, e.u) -= e.weight;
    l(e.u, e.u) += e.weight;
    l(e.v, e.v) += e.weight;
  }
  return l;
}

Graph percolate(const Graph& g, const std::vector<int>& keep) {
  std::set<int> wanted(keep.begin(), keep.end());
  for (int id : wanted)
    if (!g.has_edge_id(id))
      fail(ErrorCode::UnknownEdgeId,
           "percolate: edge id " + std::to_string(id) + " not in graph");
  std::vector<Edge> kept;
  for (const Edge& e : g.edges())
    if (wanted.count(e.id)) kept.push_back(e);
  Graph out(g.vertex_count(), std::move(kept));
  if (!g.vertex_labels().empty()) out.set_vertex_labels(g.vertex_labels());
  return out;
}

} // namespace qwsim
