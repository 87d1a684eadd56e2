#pragma once

// Exact maximum-weight matching by depth-first branch and bound, plus
// definition-level checks for matchings produced elsewhere. Exponential in
// the number of edges; the cap keeps it honest.

#include <algorithm>
#include <numeric>
#include <span>
#include <vector>

#include "hlm/matching.hpp"

namespace hlm {

struct ExactResult {
  std::vector<edge_id> optimal_edges;  // ascending; lexicographically smallest optimum
  double optimal_weight = 0.0;
  std::uint64_t explored = 0;  // candidate nodes visited
};

namespace detail {

// Candidate sums are always re-accumulated in ascending id order so equal
// sets compare equal regardless of search order.
inline double canonical_weight(std::vector<edge_id>& edges, std::span<const double> weights) {
  std::sort(edges.begin(), edges.end());
  double w = 0.0;
  for (edge_id e : edges) w += weights[e];
  return w;
}

struct ExactSearch {
  const Hypergraph& h;
  std::span<const double> weights;
  std::vector<edge_id> order = {};          // by weight descending, ties by id
  std::vector<double> suffix_weight = {};   // optimistic bound of what remains
  std::vector<std::uint8_t> covered = {};
  std::vector<edge_id> current = {};
  ExactResult best = {};

  static constexpr double kSlack = 1e-12;

  void consider_leaf() {
    std::vector<edge_id> candidate = current;
    const double w = canonical_weight(candidate, weights);
    const bool better = w > best.optimal_weight + kSlack;
    const bool tied = !better && w >= best.optimal_weight - kSlack;
    if (better || (tied && std::lexicographical_compare(
                               candidate.begin(), candidate.end(),
                               best.optimal_edges.begin(), best.optimal_edges.end()))) {
      best.optimal_weight = std::max(best.optimal_weight, w);
      best.optimal_edges = std::move(candidate);
    }
  }

  void dfs(std::size_t idx, double current_weight) {
    ++best.explored;
    if (idx == order.size()) {
      consider_leaf();
      return;
    }
    // Equal-weight candidates are kept alive so the lexicographic tie rule
    // sees every optimum.
    if (current_weight + suffix_weight[idx] < best.optimal_weight - kSlack) return;

    const edge_id e = order[idx];
    auto members = h.members_of(e);
    const bool free =
        std::none_of(members.begin(), members.end(), [&](vertex_id v) { return covered[v]; });
    if (free) {
      for (vertex_id v : members) covered[v] = 1;
      current.push_back(e);
      dfs(idx + 1, current_weight + weights[e]);
      current.pop_back();
      for (vertex_id v : members) covered[v] = 0;
    }
    dfs(idx + 1, current_weight);
  }
};

}  // namespace detail

inline ExactResult exact_matching(const Hypergraph& h, std::span<const double> weights = {},
                                  std::uint32_t cap = 22) {
  if (h.num_edges > cap)
    throw input_error("instance has " + std::to_string(h.num_edges) +
                      " edges, above the exact-search cap of " + std::to_string(cap));
  if (weights.empty()) weights = h.base_weights;

  detail::ExactSearch search{h, weights};
  search.order.resize(h.num_edges);
  std::iota(search.order.begin(), search.order.end(), 0);
  std::sort(search.order.begin(), search.order.end(), [&](edge_id a, edge_id b) {
    if (weights[a] != weights[b]) return weights[a] > weights[b];
    return a < b;
  });
  search.suffix_weight.assign(h.num_edges + 1, 0.0);
  for (std::size_t i = h.num_edges; i-- > 0;)
    search.suffix_weight[i] = search.suffix_weight[i + 1] + weights[search.order[i]];
  search.covered.assign(h.num_vertices, 0);

  search.dfs(0, 0.0);
  return std::move(search.best);
}

struct VerificationReport {
  bool disjoint = false;
  bool maximal = false;
  double weight = 0.0;  // recomputed independently from base weights

  bool valid() const { return disjoint && maximal; }
};

inline VerificationReport verify_matching(const Hypergraph& h, const Matching& m) {
  for (edge_id e : m.matched_edges)
    if (e >= h.num_edges) throw input_error("matching references edge " + std::to_string(e));

  VerificationReport report;
  std::vector<std::uint8_t> covered(h.num_vertices, 0);
  report.disjoint = true;
  for (edge_id e : m.matched_edges) {
    for (vertex_id v : h.members_of(e)) {
      if (covered[v]) report.disjoint = false;
      covered[v] = 1;
    }
    report.weight += h.base_weights[e];
  }

  std::vector<std::uint8_t> in_matching(h.num_edges, 0);
  for (edge_id e : m.matched_edges) in_matching[e] = 1;
  report.maximal = true;
  for (edge_id e = 0; e < h.num_edges && report.maximal; ++e) {
    if (in_matching[e]) continue;
    auto members = h.members_of(e);
    if (std::none_of(members.begin(), members.end(), [&](vertex_id v) { return covered[v]; }))
      report.maximal = false;  // e could still be added
  }
  return report;
}

inline double approximation_ratio(const Hypergraph& h, const Matching& m,
                                  const ExactResult& exact) {
  (void)h;
  if (!(exact.optimal_weight > 0.0))
    throw input_error("optimal weight is zero; ratio undefined on an empty hypergraph");
  return m.total_weight / exact.optimal_weight;
}

}  // namespace hlm
