#pragma once

// Round-synchronous maximal independent set on the line graph, driven by the
// same weight stream as the matchers: node i carries edge i's weight each
// round. The per-round selections coincide with the per-round matched edges
// of the local-max variants, which is what makes the round counts of both
// processes interchangeable.

#include <vector>

#include "hlm/line_graph.hpp"
#include "hlm/matching.hpp"
#include "hlm/weight_stream.hpp"

namespace hlm {

inline std::vector<std::vector<edge_id>> luby_line_graph(const Hypergraph& h,
                                                         const WeightStream& stream,
                                                         std::uint32_t max_rounds = 0,
                                                         std::uint32_t line_graph_cap = 500) {
  check_noise_interval(stream);
  if (h.num_edges > line_graph_cap)
    throw input_error("line graph too large: " + std::to_string(h.num_edges) + " nodes exceed cap " +
                      std::to_string(line_graph_cap));
  if (max_rounds == 0) max_rounds = default_max_rounds(h.num_edges);

  const LineGraph lg = build_line_graph(h);
  std::vector<std::uint8_t> alive(lg.num_nodes, 1);
  std::vector<double> weights(lg.num_nodes, 0.0);
  std::vector<std::vector<edge_id>> selected_per_round;
  std::uint32_t alive_count = lg.num_nodes;
  std::uint32_t round = 0;

  while (alive_count > 0) {
    ++round;
    if (round > max_rounds) {
      RunReport report;
      report.rounds = round - 1;
      throw round_limit_error(Matching{}, std::move(report));
    }
    for (edge_id i = 0; i < lg.num_nodes; ++i)
      if (alive[i]) weights[i] = stream.weight(i, round, h.base_weights[i]);

    std::vector<edge_id> selected;
    for (edge_id i = 0; i < lg.num_nodes; ++i) {
      if (!alive[i]) continue;
      bool dominant = true;
      for (edge_id j : lg.adjacency[i]) {
        if (!alive[j]) continue;
        if (tie_break(weights[i], i, weights[j], j, stream, round) < 0) {
          dominant = false;
          break;
        }
      }
      if (dominant) selected.push_back(i);
    }

    for (edge_id i : selected) {
      if (alive[i]) --alive_count;
      alive[i] = 0;
      for (edge_id j : lg.adjacency[i]) {
        if (alive[j]) --alive_count;
        alive[j] = 0;
      }
    }
    selected_per_round.push_back(std::move(selected));
  }
  return selected_per_round;
}

}  // namespace hlm
