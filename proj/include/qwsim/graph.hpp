#ifndef QWSIM_GRAPH_HPP
#define QWSIM_GRAPH_HPP

#include <string>
#include <utility>
#include <vector>

#include "qwsim/complex_matrix.hpp"

namespace qwsim {

struct Edge {
  int id;
  int u;
  int v;
  double weight;
};

// Undirected weighted graph, free of loops and parallel edges. Edge ids of a
// freshly constructed graph are 0..|E|-1; percolation keeps the original ids,
// so a percolated graph may carry a non-contiguous id subset.
class Graph {
 public:
  // Unit-weight edges; ids are list positions.
  Graph(int vertex_count, const std::vector<std::pair<int, int>>& edges);
  // Weighted edges as (u, v, weight); ids are list positions.
  Graph(int vertex_count,
        const std::vector<std::tuple<int, int, double>>& edges);
  // Explicit edge records (used by percolation); ids must be unique.
  Graph(int vertex_count, std::vector<Edge> edges);

  static Graph complete(int n);
  static Graph cycle(int n);

  int vertex_count() const { return vertex_count_; }
  const std::vector<Edge>& edges() const { return edges_; }

  int degree(int v) const;
  double weighted_degree(int v) const;
  // Ids of edges incident to v, ascending.
  std::vector<int> incident_edges(int v) const;
  bool has_edge_id(int id) const;
  bool unit_weights() const;

  // Optional display labels, one per vertex when set. Carried through
  // percolation, ignored by all numeric operations.
  void set_vertex_labels(std::vector<std::string> labels);
  const std::vector<std::string>& vertex_labels() const { return vertex_labels_; }

 private:
  void validate() const;

  int vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::string> vertex_labels_;
};

// Symmetric |V| x |V| matrix of edge weights, zero diagonal.
ComplexMatrix adjacency(const Graph& g);
// L = D - A with weighted degrees; rows sum to zero.
ComplexMatrix laplacian(const Graph& g);
// Same vertex set, edge list restricted to `keep` (edge ids of g).
Graph percolate(const Graph& g, const std::vector<int>& keep);

} // namespace qwsim

#endif
