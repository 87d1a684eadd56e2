#pragma once

// Sequential round-based local-max matching plus the sorted greedy baseline.
// Removed edges are soft-deleted: status flags flip, nothing is repacked.

#include <algorithm>
#include <chrono>
#include <numeric>
#include <vector>

#include "hlm/matching.hpp"
#include "hlm/weight_stream.hpp"

namespace hlm {

// One round over the soft-deleted structure:
//   A: every active vertex picks its heaviest active incident edge (tie order).
//   B: agreement counts are recomputed from scratch as |{v in e : T[v] = e}|.
//   C: edges agreed on by all members are matched; their vertices complete.
//   D: active edges touching a completed vertex deactivate, then the
//      completed vertices do.
inline RoundDelta run_round(const Hypergraph& h, RoundState& st, std::span<const double> weights,
                            const WeightStream& stream, std::uint32_t round,
                            WorkCounters* wc = nullptr) {
  const auto active = static_cast<std::uint8_t>(EdgeStatus::active);
  RoundDelta delta;

  for (vertex_id v = 0; v < h.num_vertices; ++v) {
    if (!st.vertex_active[v]) continue;
    edge_id best = kInvalidEdge;
    for (edge_id e : h.edges_of(v)) {
      if (st.edge_status[e] != active) continue;
      if (best == kInvalidEdge ||
          tie_break(weights[e], e, weights[best], best, stream, round) > 0)
        best = e;
    }
    st.top_edge[v] = best;
  }

  std::fill(st.agree_count.begin(), st.agree_count.end(), 0);
  for (vertex_id v = 0; v < h.num_vertices; ++v)
    if (st.vertex_active[v] && st.top_edge[v] != kInvalidEdge) ++st.agree_count[st.top_edge[v]];

  for (edge_id e = 0; e < h.num_edges; ++e) {
    if (st.edge_status[e] != active) continue;
    if (st.agree_count[e] != h.edge_size(e)) continue;
    st.edge_status[e] = static_cast<std::uint8_t>(EdgeStatus::matched);
    delta.matched.push_back(e);
    for (vertex_id v : h.members_of(e)) st.newly_completed[v] = 1;
  }

  for (vertex_id v = 0; v < h.num_vertices; ++v) {
    if (!st.vertex_active[v] || !st.newly_completed[v]) continue;
    for (edge_id e : h.edges_of(v)) {
      if (st.edge_status[e] == active) {
        st.edge_status[e] = static_cast<std::uint8_t>(EdgeStatus::inactive);
        ++delta.deactivated;
      }
    }
    st.vertex_active[v] = 0;
    st.newly_completed[v] = 0;
  }

  if (wc) {
    // argmax, completion marking, deactivation each sweep the structure
    wc->total_pin_visits += 3 * h.pin_count();
    wc->total_edge_visits += 2 * static_cast<std::uint64_t>(h.num_edges);
  }
  return delta;
}

namespace detail {

inline Matching finish_matching(const Hypergraph& h, std::vector<edge_id> matched,
                                const RunReport& report) {
  Matching m;
  std::sort(matched.begin(), matched.end());
  m.matched_edges = std::move(matched);
  for (edge_id e : m.matched_edges) m.total_weight += h.base_weights[e];
  m.rounds_used = report.rounds;
  m.per_round_matched = report.matched_per_round_count;
  return m;
}

inline void record_round(RunReport& report, RoundDelta&& delta) {
  ++report.rounds;
  report.matched_per_round_count.push_back(static_cast<std::uint32_t>(delta.matched.size()));
  report.deactivated_per_round.push_back(delta.deactivated);
  report.matched_per_round.push_back(std::move(delta.matched));
}

}  // namespace detail

inline MatchResult local_max_sequential(const Hypergraph& h, const WeightStream& stream,
                                        std::uint32_t max_rounds = 0) {
  check_noise_interval(stream);
  if (max_rounds == 0) max_rounds = default_max_rounds(h.num_edges);
  const auto start = std::chrono::steady_clock::now();

  RoundState st(h);
  RunReport report;
  std::vector<double> weights(h.num_edges, 0.0);
  std::vector<edge_id> matched;
  std::uint32_t active_edges = h.num_edges;
  std::uint32_t round = 0;

  while (active_edges > 0) {
    ++round;
    if (round > max_rounds) {
      report.work.rounds = report.rounds;
      Matching partial = detail::finish_matching(h, std::move(matched), report);
      throw round_limit_error(std::move(partial), std::move(report));
    }
    round_weights(stream, h, round, st.edge_status, weights);
    report.work.total_edge_visits += h.num_edges;
    RoundDelta delta = run_round(h, st, weights, stream, round, &report.work);
    active_edges -= static_cast<std::uint32_t>(delta.matched.size()) + delta.deactivated;
    matched.insert(matched.end(), delta.matched.begin(), delta.matched.end());
    detail::record_round(report, std::move(delta));
  }

  report.work.rounds = report.rounds;
  report.wall_time_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return {detail::finish_matching(h, std::move(matched), report), report};
}

// Classic baseline: scan edges in decreasing base-weight order (ties by id)
// and take every edge disjoint from the ones already taken.
inline Matching greedy_sorted(const Hypergraph& h) {
  std::vector<edge_id> order(h.num_edges);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](edge_id a, edge_id b) {
    if (h.base_weights[a] != h.base_weights[b]) return h.base_weights[a] > h.base_weights[b];
    return a < b;
  });

  std::vector<std::uint8_t> covered(h.num_vertices, 0);
  Matching m;
  for (edge_id e : order) {
    auto members = h.members_of(e);
    if (std::any_of(members.begin(), members.end(), [&](vertex_id v) { return covered[v]; }))
      continue;
    for (vertex_id v : members) covered[v] = 1;
    m.matched_edges.push_back(e);
    m.total_weight += h.base_weights[e];
  }
  std::sort(m.matched_edges.begin(), m.matched_edges.end());
  m.rounds_used = 1;
  m.per_round_matched = {static_cast<std::uint32_t>(m.matched_edges.size())};
  return m;
}

}  // namespace hlm
