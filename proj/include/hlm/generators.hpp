#pragma once

// Instance generators: the tight approximation family and seeded random
// hypergraphs for test corpora. All output is a pure function of the
// parameters, independent of platform library internals.

#include <string>
#include <vector>

#include "hlm/hypergraph.hpp"
#include "hlm/weight_stream.hpp"

namespace hlm {

namespace detail {

// Tiny sequential generator for instance construction only; the matchers
// never touch it.
struct SplitMix64 {
  std::uint64_t state;
  explicit SplitMix64(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
  // Uniform in [0, bound); bound > 0. Modulo bias is irrelevant here.
  std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }
};

}  // namespace detail

// Worst-case family for the 1/d guarantee: d disjoint pair edges of weight 1
// whose left endpoints are additionally joined by one rank-d edge of weight
// 1 + epsilon. Any local-max rule takes the heavy edge and nothing else.
inline Hypergraph generate_tight_family(std::uint32_t d, double epsilon) {
  if (d < 2) throw input_error("tight family needs d >= 2");
  if (!(epsilon > 0.0)) throw input_error("tight family needs epsilon > 0");

  std::vector<std::vector<vertex_id>> edges;
  std::vector<double> weights;
  for (std::uint32_t i = 0; i < d; ++i) {
    edges.push_back({i, d + i});  // {x_i, y_i}
    weights.push_back(1.0);
  }
  std::vector<vertex_id> big(d);
  for (std::uint32_t i = 0; i < d; ++i) big[i] = i;
  edges.push_back(std::move(big));
  weights.push_back(1.0 + epsilon);
  return build_hypergraph(edges, weights);
}

struct RandomInstanceSpec {
  std::uint32_t num_vertices = 0;
  std::uint32_t num_edges = 0;
  std::uint32_t min_edge_size = 2;
  std::uint32_t max_edge_size = 3;
  std::uint64_t seed = 1;
};

// Edges draw distinct vertices uniformly; vertices that end up unused are
// dropped and the rest renumbered, so the result never has degree-0
// vertices. Parallel edges may occur and are kept as distinct edges.
inline Hypergraph generate_random(const RandomInstanceSpec& spec) {
  if (spec.num_vertices == 0 || spec.num_edges == 0)
    throw input_error("random instance needs at least one vertex and one edge");
  if (spec.min_edge_size == 0 || spec.min_edge_size > spec.max_edge_size)
    throw input_error("random instance needs 1 <= min_edge_size <= max_edge_size");
  if (spec.max_edge_size > spec.num_vertices)
    throw input_error("edge size " + std::to_string(spec.max_edge_size) + " exceeds vertex count " +
                      std::to_string(spec.num_vertices));

  detail::SplitMix64 rng(spec.seed);
  std::vector<std::vector<vertex_id>> edges(spec.num_edges);
  const std::uint32_t span = spec.max_edge_size - spec.min_edge_size + 1;
  std::vector<vertex_id> scratch;
  for (auto& members : edges) {
    const std::uint32_t size = spec.min_edge_size + static_cast<std::uint32_t>(rng.next_below(span));
    scratch.clear();
    while (scratch.size() < size) {
      const auto v = static_cast<vertex_id>(rng.next_below(spec.num_vertices));
      bool seen = false;
      for (vertex_id u : scratch) seen |= (u == v);
      if (!seen) scratch.push_back(v);
    }
    members = scratch;
  }
  BuildOptions opts;
  opts.num_vertices = spec.num_vertices;
  opts.degree_zero = DegreeZeroPolicy::drop_and_renumber;
  return build_hypergraph(edges, {}, opts);
}

// Integer weights uniform in [1, 100], deterministic from the seed.
inline std::vector<double> random_weights_1_100(std::uint32_t num_edges, std::uint64_t seed) {
  detail::SplitMix64 rng(seed ^ 0x517CC1B727220A95ull);
  std::vector<double> w(num_edges);
  for (auto& x : w) x = static_cast<double>(1 + rng.next_below(100));
  return w;
}

}  // namespace hlm
