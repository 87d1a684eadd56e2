#pragma once

// Shared helpers for the test suites: independent brute-force oracles and
// small instance builders. Everything here recomputes results from the
// definitions, never through the library code paths under test.

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "hlm/hlm.hpp"

namespace testutil {

using hlm::edge_id;
using hlm::vertex_id;

// Unpruned exact maximum-weight matching over all 2^m subsets, with the
// same deterministic tie rule (lexicographically smallest optimal set).
inline hlm::ExactResult naive_enumerate(const hlm::Hypergraph& h,
                                        std::span<const double> weights = {}) {
  if (weights.empty()) weights = h.base_weights;
  hlm::ExactResult best;
  const std::uint32_t m = h.num_edges;
  for (std::uint64_t mask = 0; mask < (1ull << m); ++mask) {
    std::vector<std::uint8_t> covered(h.num_vertices, 0);
    bool feasible = true;
    std::vector<edge_id> set;
    for (edge_id e = 0; e < m && feasible; ++e) {
      if (!(mask >> e & 1)) continue;
      for (vertex_id v : h.members_of(e))
        if (covered[v]) feasible = false;
      if (!feasible) break;
      for (vertex_id v : h.members_of(e)) covered[v] = 1;
      set.push_back(e);
    }
    if (!feasible) continue;
    ++best.explored;
    double w = 0.0;
    for (edge_id e : set) w += weights[e];
    if (w > best.optimal_weight + 1e-12 ||
        (w >= best.optimal_weight - 1e-12 &&
         std::lexicographical_compare(set.begin(), set.end(), best.optimal_edges.begin(),
                                      best.optimal_edges.end()))) {
      best.optimal_weight = std::max(best.optimal_weight, w);
      best.optimal_edges = set;
    }
  }
  return best;
}

// Pairwise intersection test over all edge pairs.
inline hlm::LineGraph brute_force_line_graph(const hlm::Hypergraph& h) {
  hlm::LineGraph lg;
  lg.num_nodes = h.num_edges;
  lg.adjacency.assign(h.num_edges, {});
  for (edge_id a = 0; a < h.num_edges; ++a)
    for (edge_id b = a + 1; b < h.num_edges; ++b) {
      bool intersect = false;
      for (vertex_id u : h.members_of(a))
        for (vertex_id v : h.members_of(b)) intersect |= (u == v);
      if (intersect) {
        lg.adjacency[a].push_back(b);
        lg.adjacency[b].push_back(a);
      }
    }
  for (auto& adj : lg.adjacency) std::sort(adj.begin(), adj.end());
  return lg;
}

// Definition-level disjointness and maximality, independent of the library
// verifier.
inline bool is_disjoint(const hlm::Hypergraph& h, const std::vector<edge_id>& matched) {
  std::vector<int> cover(h.num_vertices, 0);
  for (edge_id e : matched)
    for (vertex_id v : h.members_of(e))
      if (++cover[v] > 1) return false;
  return true;
}

inline bool is_maximal(const hlm::Hypergraph& h, const std::vector<edge_id>& matched) {
  std::vector<std::uint8_t> covered(h.num_vertices, 0);
  std::set<edge_id> in(matched.begin(), matched.end());
  for (edge_id e : matched)
    for (vertex_id v : h.members_of(e)) covered[v] = 1;
  for (edge_id e = 0; e < h.num_edges; ++e) {
    if (in.count(e)) continue;
    bool addable = true;
    for (vertex_id v : h.members_of(e)) addable &= !covered[v];
    if (addable) return false;
  }
  return true;
}

// From-scratch rebuild of the active sub-hypergraph with order-preserving
// dense renumbering; the oracle for compaction.
inline hlm::Hypergraph rebuild_active(const hlm::Hypergraph& h,
                                      std::span<const std::uint8_t> vertex_active,
                                      std::span<const std::uint8_t> edge_active) {
  std::vector<vertex_id> vmap(h.num_vertices, hlm::kInvalidVertex);
  vertex_id next = 0;
  for (vertex_id v = 0; v < h.num_vertices; ++v) {
    if (!vertex_active[v]) continue;
    bool used = false;
    for (edge_id e : h.edges_of(v)) used |= edge_active[e] != 0;
    if (used) vmap[v] = next++;
  }
  std::vector<std::vector<vertex_id>> lists;
  std::vector<double> weights;
  for (edge_id e = 0; e < h.num_edges; ++e) {
    if (!edge_active[e]) continue;
    std::vector<vertex_id> members;
    for (vertex_id v : h.members_of(e)) members.push_back(vmap[v]);
    lists.push_back(std::move(members));
    weights.push_back(h.base_weights[e]);
  }
  hlm::BuildOptions opts;
  opts.num_vertices = next;
  return hlm::build_hypergraph(lists, weights, opts);
}

// Raw random edge lists, built in test code so construction can be checked
// against an independent recount.
inline std::vector<std::vector<vertex_id>> random_edge_lists(std::mt19937_64& rng,
                                                             std::uint32_t n, std::uint32_t m,
                                                             std::uint32_t min_size,
                                                             std::uint32_t max_size) {
  std::vector<std::vector<vertex_id>> lists(m);
  std::uniform_int_distribution<std::uint32_t> size_dist(min_size, max_size);
  std::uniform_int_distribution<vertex_id> vertex_dist(0, n - 1);
  for (auto& members : lists) {
    const std::uint32_t size = size_dist(rng);
    std::set<vertex_id> chosen;
    while (chosen.size() < size) chosen.insert(vertex_dist(rng));
    members.assign(chosen.begin(), chosen.end());
    std::shuffle(members.begin(), members.end(), rng);
  }
  return lists;
}

// Convenience: library-generated random instance (degree-0 free).
inline hlm::Hypergraph random_instance(std::uint64_t seed, std::uint32_t n, std::uint32_t m,
                                       std::uint32_t min_size = 2, std::uint32_t max_size = 3) {
  hlm::RandomInstanceSpec spec;
  spec.num_vertices = n;
  spec.num_edges = m;
  spec.min_edge_size = min_size;
  spec.max_edge_size = max_size;
  spec.seed = seed;
  return hlm::generate_random(spec);
}

inline hlm::WeightStream zero_noise_stream(std::uint64_t seed) {
  hlm::WeightStream s;
  s.seed = seed;
  s.noise_low = 0.0;
  s.noise_high = 0.0;
  return s;
}

inline hlm::WeightStream uniform_stream(std::uint64_t seed,
                                        hlm::GeneratorKind kind = hlm::GeneratorKind::xorshift) {
  hlm::WeightStream s;
  s.seed = seed;
  s.kind = kind;
  s.mode = hlm::WeightMode::replace_uniform;
  return s;
}

}  // namespace testutil
