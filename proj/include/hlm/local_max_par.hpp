#pragma once

// Data-parallel local-max matching. Three variants share one round
// semantics and produce identical matchings:
//   crcw          four sub-phases; agreement counts accumulate through
//                 commutative atomic adds, deactivation uses benign
//                 same-value concurrent stores.
//   crew          six sub-phases; every per-edge quantity is gathered by the
//                 task that owns the edge, so no location is written twice
//                 within a phase. An assertion mode checks that.
//   work_optimal  crew rounds on a hypergraph that is physically compacted
//                 after every round, so total traffic stays proportional to
//                 the input instead of rounds times the input.
//
// Phases are separated by fork-join barriers. Within a phase, chunks of the
// index range go to arbitrary workers; all cross-chunk interaction is either
// disjoint writes or commutative accumulation, which keeps results identical
// for every worker count.

#include <atomic>
#include <chrono>
#include <memory>
#include <numeric>
#include <span>
#include <vector>

#include "hlm/local_max_seq.hpp"
#include "hlm/matching.hpp"
#include "hlm/parallel.hpp"
#include "hlm/weight_stream.hpp"

namespace hlm {

enum class Variant : std::uint8_t { seq, crcw, crew, work_optimal, greedy };

struct ParallelConfig {
  unsigned workers = 0;  // 0 selects the hardware concurrency
  Variant variant = Variant::crcw;
  std::size_t grain = 1024;  // minimum indices per scheduled chunk
  std::uint32_t max_rounds = 0;  // 0 selects the size-based default
  bool assert_exclusive_writes = false;  // debug checks for the crew phases
};

namespace detail {

// Debug instrumentation for the crew discipline: counts stores per location
// within one phase and flags any cell written twice.
struct WriteChecker {
  bool enabled = false;
  std::vector<std::uint32_t> counts;
  std::atomic<std::uint64_t> conflicts{0};

  void begin_phase(std::size_t size) {
    if (enabled) counts.assign(size, 0);
  }
  void record(std::size_t i) {
    if (!enabled) return;
    if (std::atomic_ref<std::uint32_t>(counts[i]).fetch_add(1, std::memory_order_relaxed) != 0)
      conflicts.fetch_add(1, std::memory_order_relaxed);
  }
};

inline constexpr auto kActive = static_cast<std::uint8_t>(EdgeStatus::active);
inline constexpr auto kMatched = static_cast<std::uint8_t>(EdgeStatus::matched);
inline constexpr auto kInactive = static_cast<std::uint8_t>(EdgeStatus::inactive);

// Ascending ids of edges flagged this round; clears the flags. Static block
// partition keeps the concatenation order deterministic.
inline std::vector<edge_id> collect_and_clear(std::vector<std::uint8_t>& flags, unsigned workers) {
  const std::size_t n = flags.size();
  std::size_t blocks = workers <= 1 || n < 4096 ? 1 : static_cast<std::size_t>(workers) * 4;
  if (blocks > n) blocks = n == 0 ? 1 : n;
  const std::size_t per = (n + blocks - 1) / blocks;
  blocks = n == 0 ? 1 : (n + per - 1) / per;
  std::vector<std::vector<edge_id>> partial(blocks);
  parallel_for(blocks, workers, 1, [&](std::size_t blk) {
    const std::size_t b = blk * per;
    const std::size_t e = std::min(b + per, n);
    for (std::size_t i = b; i < e; ++i)
      if (flags[i]) {
        partial[blk].push_back(static_cast<edge_id>(i));
        flags[i] = 0;
      }
  });
  std::vector<edge_id> out;
  for (auto& part : partial) out.insert(out.end(), part.begin(), part.end());
  return out;
}

// Shared skeleton for the soft-deletion variants. RoundBody runs the
// variant-specific middle of the round (agreement counting, matching,
// deactivation) and returns the number of edges it deactivated.
template <typename RoundBody>
MatchResult run_soft_delete(const Hypergraph& h, const WeightStream& stream,
                            const ParallelConfig& cfg, RoundBody&& round_body,
                            WriteChecker* checker) {
  check_noise_interval(stream);
  const unsigned workers = resolve_workers(cfg.workers);
  const std::size_t grain = cfg.grain == 0 ? 1 : cfg.grain;
  const std::uint32_t max_rounds =
      cfg.max_rounds == 0 ? default_max_rounds(h.num_edges) : cfg.max_rounds;
  const auto start = std::chrono::steady_clock::now();

  RoundState st(h);
  RunReport report;
  // Dead edges keep a negative sentinel weight from the moment they
  // deactivate, so the argmax never has to consult the status array. No
  // initial fill needed: every edge starts active, so the first refresh
  // writes every slot before anything reads it.
  std::unique_ptr<double[]> weights_store(new double[h.num_edges]);
  std::span<double> weights(weights_store.get(), h.num_edges);
  std::vector<std::uint8_t> matched_now(h.num_edges, 0);
  std::vector<edge_id> matched_all;
  std::uint32_t active_edges = h.num_edges;
  std::uint32_t round = 0;

  while (active_edges > 0) {
    ++round;
    if (round > max_rounds) {
      report.work.rounds = report.rounds;
      if (checker) report.write_conflicts = checker->conflicts.load();
      Matching partial = finish_matching(h, std::move(matched_all), report);
      throw round_limit_error(std::move(partial), std::move(report));
    }

    // Weight refresh on active edges.
    if (checker) checker->begin_phase(h.num_edges);
    parallel_blocks(h.num_edges, workers, grain, [&](std::size_t b, std::size_t e) {
      for (std::size_t i = b; i < e; ++i)
        if (st.edge_status[i] == kActive) {
          weights[i] = stream.weight(static_cast<edge_id>(i), round, h.base_weights[i]);
          if (checker) checker->record(i);
        }
    });
    report.work.total_edge_visits += h.num_edges;

    // Per-vertex argmax over active incident edges; real weights are
    // positive, so the sentinel never wins and ties stay impossible with it.
    if (checker) checker->begin_phase(h.num_vertices);
    parallel_blocks(h.num_vertices, workers, grain, [&](std::size_t b, std::size_t e) {
      for (std::size_t v = b; v < e; ++v) {
        if (!st.vertex_active[v]) continue;
        edge_id best = kInvalidEdge;
        double best_weight = 0.0;
        for (edge_id ed : h.edges_of(static_cast<vertex_id>(v))) {
          const double w = weights[ed];
          if (w > best_weight) {
            best = ed;
            best_weight = w;
          } else if (w == best_weight && best != kInvalidEdge &&
                     tie_break(w, ed, best_weight, best, stream, round) > 0) {
            best = ed;
          }
        }
        st.top_edge[v] = best;
        if (checker) checker->record(v);
      }
    });
    report.work.total_pin_visits += h.pin_count();

    const std::uint32_t deactivated = round_body(round, st, weights, matched_now, report);

    std::vector<edge_id> matched = collect_and_clear(matched_now, workers);
    report.work.total_edge_visits += h.num_edges;

    RoundDelta delta;
    delta.deactivated = deactivated;
    active_edges -= deactivated + static_cast<std::uint32_t>(matched.size());
    matched_all.insert(matched_all.end(), matched.begin(), matched.end());
    delta.matched = std::move(matched);
    record_round(report, std::move(delta));
  }

  report.work.rounds = report.rounds;
  if (checker) {
    report.write_conflicts = checker->conflicts.load();
    if (report.write_conflicts != 0)
      throw std::logic_error("crew phase wrote one location twice; this is a bug");
  }
  report.wall_time_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return {finish_matching(h, std::move(matched_all), report), report};
}

}  // namespace detail

// Four sub-phases per round: weight refresh, per-vertex argmax, agreement
// counting through lost-update-free atomic adds followed by matching, then
// concurrent deactivation (same-value stores only).
inline MatchResult local_max_crcw(const Hypergraph& h, const WeightStream& stream,
                                  const ParallelConfig& cfg = {}) {
  const unsigned workers = resolve_workers(cfg.workers);
  const std::size_t grain = cfg.grain == 0 ? 1 : cfg.grain;

  auto body = [&](std::uint32_t round, RoundState& st, std::span<double> weights,
                  std::vector<std::uint8_t>& matched_now, RunReport& report) -> std::uint32_t {
    (void)round;
    // Agreement counts via one commutative atomic add per active vertex.
    // Only the total is ever compared against the edge size, so the
    // accumulation order cannot leak into results. Entries were zeroed when
    // the previous round consumed them.
    parallel_blocks(h.num_vertices, workers, grain, [&](std::size_t b, std::size_t e) {
      for (std::size_t v = b; v < e; ++v) {
        if (!st.vertex_active[v] || st.top_edge[v] == kInvalidEdge) continue;
        std::atomic_ref<std::uint32_t>(st.agree_count[st.top_edge[v]])
            .fetch_add(1, std::memory_order_relaxed);
      }
    });

    // Fully agreed edges join the matching; their vertices complete. Matched
    // edges are vertex-disjoint, so the completion stores are exclusive.
    parallel_blocks(h.num_edges, workers, grain, [&](std::size_t b, std::size_t e) {
      for (std::size_t i = b; i < e; ++i) {
        if (st.edge_status[i] != detail::kActive) continue;
        const auto ed = static_cast<edge_id>(i);
        const std::uint32_t agreed = st.agree_count[i];
        st.agree_count[i] = 0;  // clean slate for the next round
        if (agreed != h.edge_size(ed)) continue;
        st.edge_status[i] = detail::kMatched;
        matched_now[i] = 1;
        for (vertex_id v : h.members_of(ed)) st.newly_completed[v] = 1;
      }
    });
    report.work.total_edge_visits += h.num_edges;

    // Deactivate everything incident to a completed vertex. Concurrent
    // attempts on one status byte race benignly; the exchange winner counts
    // the transition and plants the sentinel weight.
    std::atomic<std::uint32_t> deactivated{0};
    parallel_blocks(h.num_vertices, workers, grain, [&](std::size_t b, std::size_t e) {
      std::uint32_t local = 0;
      for (std::size_t v = b; v < e; ++v) {
        if (!st.vertex_active[v] || !st.newly_completed[v]) continue;
        for (edge_id ed : h.edges_of(static_cast<vertex_id>(v))) {
          std::atomic_ref<std::uint8_t> status(st.edge_status[ed]);
          if (status.load(std::memory_order_relaxed) == detail::kActive &&
              status.exchange(detail::kInactive, std::memory_order_relaxed) ==
                  detail::kActive) {
            weights[ed] = -1.0;
            ++local;
          }
        }
        st.vertex_active[v] = 0;
        st.newly_completed[v] = 0;
      }
      deactivated.fetch_add(local, std::memory_order_relaxed);
    });
    report.work.total_pin_visits += 2 * h.pin_count();  // marking + deactivation sweeps
    return deactivated.load();
  };

  return detail::run_soft_delete(h, stream, cfg, body, nullptr);
}

// Six sub-phases per round; all writes are exclusive. Per-edge quantities
// are gathered over the edge's own member segment (segmented reductions),
// never scattered to from vertices.
inline MatchResult local_max_crew(const Hypergraph& h, const WeightStream& stream,
                                  const ParallelConfig& cfg = {}) {
  const unsigned workers = resolve_workers(cfg.workers);
  const std::size_t grain = cfg.grain == 0 ? 1 : cfg.grain;
  detail::WriteChecker checker;
  checker.enabled = cfg.assert_exclusive_writes;

  auto body = [&](std::uint32_t round, RoundState& st, std::span<double> weights,
                  std::vector<std::uint8_t>& matched_now, RunReport& report) -> std::uint32_t {
    (void)round;
    // Agreement by segmented sum over each active edge's members, then the
    // match decision for that same edge: one owner task per edge.
    checker.begin_phase(h.num_edges);
    parallel_blocks(h.num_edges, workers, grain, [&](std::size_t b, std::size_t e) {
      for (std::size_t i = b; i < e; ++i) {
        if (st.edge_status[i] != detail::kActive) continue;
        const auto ed = static_cast<edge_id>(i);
        std::uint32_t agreed = 0;
        for (vertex_id v : h.members_of(ed)) agreed += st.top_edge[v] == ed ? 1u : 0u;
        st.agree_count[i] = agreed;
        checker.record(i);
        if (agreed == h.edge_size(ed)) {
          st.edge_status[i] = detail::kMatched;
          matched_now[i] = 1;
        }
      }
    });
    report.work.total_edge_visits += h.num_edges;

    // Completion marking scatters from matched edges only; those are
    // vertex-disjoint, so every store target is unique.
    checker.begin_phase(h.num_vertices);
    parallel_blocks(h.num_edges, workers, grain, [&](std::size_t b, std::size_t e) {
      for (std::size_t i = b; i < e; ++i) {
        if (!matched_now[i]) continue;
        for (vertex_id v : h.members_of(static_cast<edge_id>(i))) {
          st.newly_completed[v] = 1;
          checker.record(v);
        }
      }
    });
    report.work.total_edge_visits += h.num_edges;

    // Deactivation by segmented OR over each remaining active edge.
    checker.begin_phase(h.num_edges);
    std::atomic<std::uint32_t> deactivated{0};
    parallel_blocks(h.num_edges, workers, grain, [&](std::size_t b, std::size_t e) {
      std::uint32_t local = 0;
      for (std::size_t i = b; i < e; ++i) {
        if (st.edge_status[i] != detail::kActive) continue;
        const auto ed = static_cast<edge_id>(i);
        bool touched = false;
        for (vertex_id v : h.members_of(ed)) touched |= st.newly_completed[v] != 0;
        if (touched) {
          st.edge_status[i] = detail::kInactive;
          weights[i] = -1.0;
          ++local;
          checker.record(i);
        }
      }
      deactivated.fetch_add(local, std::memory_order_relaxed);
    });
    report.work.total_edge_visits += h.num_edges;
    report.work.total_pin_visits += 3 * h.pin_count();  // agreement, marking, OR sweeps

    // Completed vertices leave; one owner task per vertex.
    checker.begin_phase(h.num_vertices);
    parallel_blocks(h.num_vertices, workers, grain, [&](std::size_t b, std::size_t e) {
      for (std::size_t v = b; v < e; ++v) {
        if (!st.vertex_active[v] || !st.newly_completed[v]) continue;
        st.vertex_active[v] = 0;
        st.newly_completed[v] = 0;
        checker.record(v);
      }
    });
    return deactivated.load();
  };

  return detail::run_soft_delete(h, stream, cfg, body,
                                 cfg.assert_exclusive_writes ? &checker : nullptr);
}

struct CompactResult {
  Hypergraph graph;
  std::vector<vertex_id> vertex_map;  // old id -> new id or kInvalidVertex
  std::vector<edge_id> edge_map;      // old id -> new id or kInvalidEdge
};

// Rebuilds the incidence structure to hold exactly the active part,
// renumbered densely via exclusive prefix sums over the activity flags.
// Requires that no active edge touches an inactive vertex; active vertices
// left without any active edge are dropped as well.
inline CompactResult compact(const Hypergraph& h, std::span<const std::uint8_t> vertex_active,
                             std::span<const std::uint8_t> edge_active, unsigned workers = 1,
                             WorkCounters* wc = nullptr) {
  workers = resolve_workers(workers);
  const std::size_t grain = 256;
  const std::size_t n = h.num_vertices;
  const std::size_t m = h.num_edges;

  std::vector<std::uint32_t> new_degree(n, 0);
  parallel_blocks(n, workers, grain, [&](std::size_t b, std::size_t e) {
    for (std::size_t v = b; v < e; ++v) {
      if (!vertex_active[v]) continue;
      std::uint32_t deg = 0;
      for (edge_id ed : h.edges_of(static_cast<vertex_id>(v)))
        deg += edge_active[ed] ? 1u : 0u;
      new_degree[v] = deg;
    }
  });

  std::vector<offset_t> vertex_pos;  // P_V
  const offset_t kept_vertices = exclusive_scan(
      n, workers, [&](std::size_t v) { return vertex_active[v] && new_degree[v] > 0 ? 1u : 0u; },
      vertex_pos);
  std::vector<offset_t> edge_pos;  // P_E
  const offset_t kept_edges =
      exclusive_scan(m, workers, [&](std::size_t e) { return edge_active[e] ? 1u : 0u; }, edge_pos);

  CompactResult out;
  out.vertex_map.assign(n, kInvalidVertex);
  out.edge_map.assign(m, kInvalidEdge);
  parallel_blocks(n, workers, grain, [&](std::size_t b, std::size_t e) {
    for (std::size_t v = b; v < e; ++v)
      if (vertex_active[v] && new_degree[v] > 0)
        out.vertex_map[v] = static_cast<vertex_id>(vertex_pos[v]);
  });
  parallel_blocks(m, workers, grain, [&](std::size_t b, std::size_t e) {
    for (std::size_t i = b; i < e; ++i)
      if (edge_active[i]) out.edge_map[i] = static_cast<edge_id>(edge_pos[i]);
  });

  Hypergraph& g = out.graph;
  g.num_vertices = static_cast<std::uint32_t>(kept_vertices);
  g.num_edges = static_cast<std::uint32_t>(kept_edges);

  std::vector<std::uint32_t> sizes(kept_vertices, 0);
  parallel_blocks(n, workers, grain, [&](std::size_t b, std::size_t e) {
    for (std::size_t v = b; v < e; ++v)
      if (out.vertex_map[v] != kInvalidVertex) sizes[out.vertex_map[v]] = new_degree[v];
  });
  std::vector<offset_t> scanned;
  offset_t kappa = exclusive_scan(
      kept_vertices, workers, [&](std::size_t i) { return sizes[i]; }, scanned);
  g.vertex_offsets = std::move(scanned);
  g.vertex_offsets.push_back(kappa);

  std::vector<std::uint32_t> esizes(kept_edges, 0);
  parallel_blocks(m, workers, grain, [&](std::size_t b, std::size_t e) {
    for (std::size_t i = b; i < e; ++i)
      if (out.edge_map[i] != kInvalidEdge)
        esizes[out.edge_map[i]] = h.edge_size(static_cast<edge_id>(i));
  });
  offset_t kappa_edges = exclusive_scan(
      kept_edges, workers, [&](std::size_t i) { return esizes[i]; }, scanned);
  g.edge_offsets = std::move(scanned);
  g.edge_offsets.push_back(kappa_edges);

  g.vertex_incidence.resize(kappa);
  g.edge_members.resize(kappa_edges);
  g.base_weights.resize(kept_edges);

  parallel_blocks(n, workers, grain, [&](std::size_t b, std::size_t e) {
    for (std::size_t v = b; v < e; ++v) {
      if (out.vertex_map[v] == kInvalidVertex) continue;
      offset_t pos = g.vertex_offsets[out.vertex_map[v]];
      for (edge_id ed : h.edges_of(static_cast<vertex_id>(v))) {
        if (out.edge_map[ed] == kInvalidEdge) continue;
        g.vertex_incidence[pos++] = out.edge_map[ed];
      }
    }
  });
  parallel_blocks(m, workers, grain, [&](std::size_t b, std::size_t e) {
    for (std::size_t i = b; i < e; ++i) {
      if (out.edge_map[i] == kInvalidEdge) continue;
      const auto ed = static_cast<edge_id>(i);
      offset_t pos = g.edge_offsets[out.edge_map[i]];
      for (vertex_id v : h.members_of(ed)) {
        if (!vertex_active[v])
          throw input_error("active edge " + std::to_string(i) +
                            " references inactive vertex " + std::to_string(v));
        g.edge_members[pos++] = out.vertex_map[v];
      }
      g.base_weights[out.edge_map[i]] = h.base_weights[i];
    }
  });

  if (wc) {
    wc->prefix_sum_invocations += 4;
    wc->compactions += 1;
    // degree recount + incidence rewrite read the old structure, both
    // rewrites store the new one
    wc->total_pin_visits += 2 * h.pin_count() + 3 * kappa;
    wc->total_edge_visits += m;
  }
  return out;
}

// Crew semantics with hard removal: matched ids accumulate before each
// compaction, the next round runs on the compacted hypergraph, and no
// activity flags are consulted anywhere. Weights and tie hashes are always
// drawn with original edge ids, so the matching equals the other variants'.
inline MatchResult local_max_work_optimal(const Hypergraph& h, const WeightStream& stream,
                                          const ParallelConfig& cfg = {}) {
  check_noise_interval(stream);
  const unsigned workers = resolve_workers(cfg.workers);
  const std::size_t grain = cfg.grain == 0 ? 1 : cfg.grain;
  const std::uint32_t max_rounds =
      cfg.max_rounds == 0 ? default_max_rounds(h.num_edges) : cfg.max_rounds;
  const auto start = std::chrono::steady_clock::now();

  Hypergraph cur = h;
  std::vector<edge_id> orig_edge(h.num_edges);
  std::iota(orig_edge.begin(), orig_edge.end(), 0);

  RunReport report;
  std::vector<edge_id> matched_all;
  std::vector<double> weights;
  std::vector<edge_id> top;
  std::vector<std::uint8_t> matched_now, newly, edge_keep, vertex_keep;
  std::uint32_t round = 0;

  while (cur.num_edges > 0) {
    ++round;
    if (round > max_rounds) {
      report.work.rounds = report.rounds;
      Matching partial = detail::finish_matching(h, std::move(matched_all), report);
      throw round_limit_error(std::move(partial), std::move(report));
    }
    const std::size_t m_r = cur.num_edges;
    const std::size_t n_r = cur.num_vertices;

    weights.assign(m_r, 0.0);
    parallel_blocks(m_r, workers, grain, [&](std::size_t b, std::size_t e) {
      for (std::size_t i = b; i < e; ++i)
        weights[i] = stream.weight(orig_edge[i], round, cur.base_weights[i]);
    });
    report.work.total_edge_visits += m_r;

    top.assign(n_r, kInvalidEdge);
    parallel_blocks(n_r, workers, grain, [&](std::size_t b, std::size_t e) {
      for (std::size_t v = b; v < e; ++v) {
        edge_id best = kInvalidEdge;
        double best_weight = 0.0;
        for (edge_id ed : cur.edges_of(static_cast<vertex_id>(v))) {
          const double w = weights[ed];
          if (w > best_weight) {
            best = ed;
            best_weight = w;
          } else if (w == best_weight && best != kInvalidEdge &&
                     tie_break(w, orig_edge[ed], best_weight, orig_edge[best], stream, round) >
                         0) {
            best = ed;
          }
        }
        top[v] = best;
      }
    });

    matched_now.assign(m_r, 0);
    newly.assign(n_r, 0);
    parallel_blocks(m_r, workers, grain, [&](std::size_t b, std::size_t e) {
      for (std::size_t i = b; i < e; ++i) {
        const auto ed = static_cast<edge_id>(i);
        std::uint32_t agreed = 0;
        for (vertex_id v : cur.members_of(ed)) agreed += top[v] == ed ? 1u : 0u;
        if (agreed == cur.edge_size(ed)) matched_now[i] = 1;
      }
    });
    report.work.total_edge_visits += m_r;

    parallel_blocks(m_r, workers, grain, [&](std::size_t b, std::size_t e) {
      for (std::size_t i = b; i < e; ++i) {
        if (!matched_now[i]) continue;
        for (vertex_id v : cur.members_of(static_cast<edge_id>(i))) newly[v] = 1;
      }
    });

    // An edge survives iff it avoids every completed vertex; matched edges
    // never survive because all their members completed.
    edge_keep.assign(m_r, 0);
    parallel_blocks(m_r, workers, grain, [&](std::size_t b, std::size_t e) {
      for (std::size_t i = b; i < e; ++i) {
        bool keep = true;
        for (vertex_id v : cur.members_of(static_cast<edge_id>(i))) keep &= newly[v] == 0;
        edge_keep[i] = keep ? 1 : 0;
      }
    });
    report.work.total_edge_visits += m_r;

    std::vector<edge_id> matched;
    std::uint64_t matched_pins = 0;
    for (std::size_t i = 0; i < m_r; ++i)
      if (matched_now[i]) {
        matched.push_back(orig_edge[i]);  // ascending: order is preserved
        matched_pins += cur.edge_size(static_cast<edge_id>(i));
      }
    // argmax, agreement, keep sweeps plus the completion scatter
    report.work.total_pin_visits += 3 * cur.pin_count() + matched_pins;

    vertex_keep.assign(n_r, 0);
    parallel_blocks(n_r, workers, grain, [&](std::size_t b, std::size_t e) {
      for (std::size_t v = b; v < e; ++v) vertex_keep[v] = newly[v] ? 0 : 1;
    });

    CompactResult compacted = compact(cur, vertex_keep, edge_keep, workers, &report.work);
    std::vector<edge_id> next_orig(compacted.graph.num_edges);
    parallel_blocks(m_r, workers, grain, [&](std::size_t b, std::size_t e) {
      for (std::size_t i = b; i < e; ++i)
        if (compacted.edge_map[i] != kInvalidEdge) next_orig[compacted.edge_map[i]] = orig_edge[i];
    });
    orig_edge = std::move(next_orig);

    RoundDelta delta;
    delta.deactivated = static_cast<std::uint32_t>(m_r - matched.size()) -
                        compacted.graph.num_edges;
    matched_all.insert(matched_all.end(), matched.begin(), matched.end());
    delta.matched = std::move(matched);
    cur = std::move(compacted.graph);
    detail::record_round(report, std::move(delta));
  }

  report.work.rounds = report.rounds;
  report.wall_time_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return {detail::finish_matching(h, std::move(matched_all), report), report};
}

inline MatchResult run_variant(const Hypergraph& h, const WeightStream& stream,
                               const ParallelConfig& cfg) {
  switch (cfg.variant) {
    case Variant::seq:
      return local_max_sequential(h, stream, cfg.max_rounds);
    case Variant::crcw:
      return local_max_crcw(h, stream, cfg);
    case Variant::crew:
      return local_max_crew(h, stream, cfg);
    case Variant::work_optimal:
      return local_max_work_optimal(h, stream, cfg);
    case Variant::greedy: {
      const auto start = std::chrono::steady_clock::now();
      Matching m = greedy_sorted(h);
      RunReport report;
      report.rounds = m.rounds_used;
      report.matched_per_round_count = m.per_round_matched;
      report.deactivated_per_round = {
          static_cast<std::uint32_t>(h.num_edges - m.matched_edges.size())};
      report.matched_per_round = {m.matched_edges};
      report.work.rounds = 1;
      report.work.total_edge_visits = h.num_edges;
      report.work.total_pin_visits = h.pin_count();
      report.wall_time_ms = std::chrono::duration<double, std::milli>(
                                std::chrono::steady_clock::now() - start)
                                .count();
      return {std::move(m), std::move(report)};
    }
  }
  throw input_error("unknown variant");
}

}  // namespace hlm
