#include "qwsim/expansion.hpp"

#include <string>
#include <utility>

#include "qwsim/error.hpp"

namespace qwsim {

GammaIndex::GammaIndex(const Graph& g) {
  const int nv = g.vertex_count();
  const int ne = static_cast<int>(g.edges().size());
  // The construction relies on fresh contiguous edge ids.
  for (int j = 0; j < ne; ++j)
    if (!g.has_edge_id(j))
      fail(ErrorCode::InvalidGraph,
           "gamma_basis: edge ids must be contiguous 0..|E|-1");

  block_offset_.resize(nv);
  block_size_.resize(nv);
  edge_pair_.resize(ne, {0, 0});
  entries_.reserve(2 * static_cast<std::size_t>(ne));

  std::vector<int> seen(ne, 0);
  for (int v = 0; v < nv; ++v) {
    const std::vector<int> incident = g.incident_edges(v);
    if (incident.empty())
      fail(ErrorCode::IsolatedVertex,
           "gamma_basis: vertex " + std::to_string(v) + " has degree 0");
    block_offset_[v] = entries_.size();
    block_size_[v] = incident.size();
    for (int j : incident) {
      // Vertices are visited ascending, so the first slot of each pair holds
      // the smaller endpoint.
      edge_pair_[j][seen[j]++] = entries_.size();
      entries_.push_back({v, j});
    }
  }
}

std::size_t GammaIndex::index_of(int v, int j) const {
  if (v < 0 || v >= vertex_count())
    fail(ErrorCode::DimensionMismatch,
         "gamma index: vertex " + std::to_string(v) + " out of range");
  const std::size_t off = block_offset_[v];
  for (std::size_t i = 0; i < block_size_[v]; ++i)
    if (entries_[off + i].edge == j) return off + i;
  fail(ErrorCode::DimensionMismatch, "gamma index: no pair (" + std::to_string(v) +
                                         ", " + std::to_string(j) + ")");
}

GammaIndex gamma_basis(const Graph& g) { return GammaIndex(g); }

ExpandedGraph expand(const Graph& g) {
  if (!g.unit_weights())
    fail(ErrorCode::InvalidGraph, "expand: walk graphs must have unit weights");
  GammaIndex gamma(g);

  std::vector<std::pair<int, int>> exp_edges;
  std::vector<int> clique_ids;
  std::vector<int> pair_ids;

  // Clique edges first: vertex-major, pairs of incident edges lexicographic.
  for (int v = 0; v < g.vertex_count(); ++v) {
    const std::size_t off = gamma.block_offset(v);
    const std::size_t d = gamma.block_size(v);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t k = i + 1; k < d; ++k) {
        clique_ids.push_back(static_cast<int>(exp_edges.size()));
        exp_edges.emplace_back(static_cast<int>(off + i),
                               static_cast<int>(off + k));
      }
  }
  // One pair edge per original edge, ascending edge id.
  for (int j = 0; j < gamma.edge_count(); ++j) {
    const auto& pair = gamma.edge_pair(j);
    pair_ids.push_back(static_cast<int>(exp_edges.size()));
    exp_edges.emplace_back(static_cast<int>(pair[0]), static_cast<int>(pair[1]));
  }

  Graph expanded(static_cast<int>(gamma.size()), exp_edges);
  return ExpandedGraph{g, std::move(expanded), std::move(gamma),
                       std::move(clique_ids), std::move(pair_ids)};
}

Graph coin_subgraph(const ExpandedGraph& x) {
  return percolate(x.graph, x.clique_edges);
}

Graph shift_subgraph(const ExpandedGraph& x) {
  return percolate(x.graph, x.pair_edges);
}

} // namespace qwsim
