#ifndef QWSIM_EXPANSION_HPP
#define QWSIM_EXPANSION_HPP

#include <array>
#include <cstddef>
#include <vector>

#include "qwsim/graph.hpp"

namespace qwsim {

// A vertex-edge incidence pair (v, j); v is an endpoint of edge j.
struct PortPair {
  int vertex;
  int edge;
};

// Ordered basis of all vertex-edge pairs of a graph, vertex-major with edge
// ids ascending inside each vertex block. Vertex blocks are contiguous; each
// edge contributes exactly two entries.
class GammaIndex {
 public:
  GammaIndex() = default;
  GammaIndex(const Graph& g);

  std::size_t size() const { return entries_.size(); } // 2|E|
  const std::vector<PortPair>& entries() const { return entries_; }

  std::size_t index_of(int v, int j) const;

  int vertex_count() const { return static_cast<int>(block_offset_.size()); }
  std::size_t block_offset(int v) const { return block_offset_[v]; }
  std::size_t block_size(int v) const { return block_size_[v]; }

  int edge_count() const { return static_cast<int>(edge_pair_.size()); }
  // Basis indices of the two members of Gamma_j, ascending vertex id.
  const std::array<std::size_t, 2>& edge_pair(int j) const {
    return edge_pair_[j];
  }

 private:
  std::vector<PortPair> entries_;
  std::vector<std::size_t> block_offset_;
  std::vector<std::size_t> block_size_;
  std::vector<std::array<std::size_t, 2>> edge_pair_;
};

// The 2|E|-vertex expanded graph: every degree-d vertex of the base graph
// becomes a d-clique, and the two entries of each Gamma_j are joined by one
// pair edge. clique_edges/pair_edges partition the edge ids of `graph`.
struct ExpandedGraph {
  Graph base;
  Graph graph;
  GammaIndex gamma;
  std::vector<int> clique_edges;
  std::vector<int> pair_edges;
};

GammaIndex gamma_basis(const Graph& g);
ExpandedGraph expand(const Graph& g);

// Percolation keeping only clique-internal edges: |V| separated cliques.
Graph coin_subgraph(const ExpandedGraph& x);
// Percolation keeping only pair edges: |E| separated 2-cliques.
Graph shift_subgraph(const ExpandedGraph& x);

} // namespace qwsim

#endif
