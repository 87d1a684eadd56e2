#pragma once

// Conflict graph over hyperedges: one node per hyperedge, an edge between
// two nodes iff the hyperedges share at least one vertex.

#include <algorithm>
#include <vector>

#include "hlm/hypergraph.hpp"

namespace hlm {

struct LineGraph {
  std::uint32_t num_nodes = 0;  // == m of the source hypergraph
  std::vector<std::vector<edge_id>> adjacency;  // sorted, no self loops

  bool operator==(const LineGraph&) const = default;
};

// Size can reach m^2; callers gate by instance size.
inline LineGraph build_line_graph(const Hypergraph& h) {
  LineGraph lg;
  lg.num_nodes = h.num_edges;
  lg.adjacency.assign(h.num_edges, {});
  for (vertex_id v = 0; v < h.num_vertices; ++v) {
    auto edges = h.edges_of(v);
    for (std::size_t i = 0; i < edges.size(); ++i)
      for (std::size_t j = i + 1; j < edges.size(); ++j) {
        lg.adjacency[edges[i]].push_back(edges[j]);
        lg.adjacency[edges[j]].push_back(edges[i]);
      }
  }
  for (auto& adj : lg.adjacency) {
    std::sort(adj.begin(), adj.end());
    adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
  }
  return lg;
}

}  // namespace hlm
