#pragma once

// Matching results, per-round scratch state, and run instrumentation shared
// by the sequential and parallel matchers.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "hlm/common.hpp"
#include "hlm/hypergraph.hpp"

namespace hlm {

struct Matching {
  std::vector<edge_id> matched_edges;  // ascending original ids
  double total_weight = 0.0;           // under the persistent base weights
  std::uint32_t rounds_used = 0;
  std::vector<std::uint32_t> per_round_matched;
};

// total_pin_visits measures the incidence traffic each executed phase sweeps
// over. Soft-deletion variants keep the full structure alive and re-sweep it
// every round, so their traffic grows with rounds * kappa; the compacting
// variant sweeps only its shrunken copy, where allocation and actual traffic
// coincide.
struct WorkCounters {
  std::uint64_t rounds = 0;
  std::uint64_t total_edge_visits = 0;  // per-edge record touches, flag checks included
  std::uint64_t total_pin_visits = 0;   // incidence entries swept by the phases
  std::uint64_t prefix_sum_invocations = 0;
  std::uint64_t compactions = 0;
};

struct RunReport {
  std::uint32_t rounds = 0;
  std::vector<std::uint32_t> matched_per_round_count;
  std::vector<std::uint32_t> deactivated_per_round;
  std::vector<std::vector<edge_id>> matched_per_round;  // ascending original ids
  WorkCounters work;
  double wall_time_ms = 0.0;
  std::uint64_t write_conflicts = 0;  // nonzero only if exclusivity checks tripped
};

struct MatchResult {
  Matching matching;
  RunReport report;
};

enum class EdgeStatus : std::uint8_t { active = 0, matched = 1, inactive = 2 };

// Mutable per-round arrays. matched/inactive are absorbing edge states; a
// vertex goes inactive exactly when a matched edge covers it.
struct RoundState {
  std::vector<edge_id> top_edge;            // T: heaviest active edge per vertex
  std::vector<std::uint32_t> agree_count;   // P: vertices whose top choice is e
  std::vector<std::uint8_t> edge_status;    // EdgeStatus values
  std::vector<std::uint8_t> vertex_active;
  std::vector<std::uint8_t> newly_completed;

  explicit RoundState(const Hypergraph& h)
      : top_edge(h.num_vertices, kInvalidEdge),
        agree_count(h.num_edges, 0),
        edge_status(h.num_edges, static_cast<std::uint8_t>(EdgeStatus::active)),
        vertex_active(h.num_vertices, 1),
        newly_completed(h.num_vertices, 0) {}
};

struct RoundDelta {
  std::vector<edge_id> matched;  // ascending
  std::uint32_t deactivated = 0;
};

// Raised when the safety cap on rounds is hit with edges still active
// (constant weights with tie-breaking disabled, or a degenerate stream).
// Partial results stay accessible.
struct round_limit_error : std::runtime_error {
  Matching partial;
  RunReport report;
  round_limit_error(Matching m, RunReport r)
      : std::runtime_error("round limit exceeded with " +
                           std::to_string(r.rounds) + " rounds used"),
        partial(std::move(m)),
        report(std::move(r)) {}
};

inline std::uint32_t default_max_rounds(std::uint32_t num_edges) {
  return 64 + 4 * ceil_log2(static_cast<std::uint64_t>(num_edges) + 2);
}

}  // namespace hlm
