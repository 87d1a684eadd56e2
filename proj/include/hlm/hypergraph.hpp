#pragma once

// Immutable bidirectional incidence structure for weighted hypergraphs.
// Both directions (vertex -> incident edges, edge -> member vertices) are
// stored as offset/value array pairs so sweeps over either side are flat
// array scans.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hlm/common.hpp"

namespace hlm {

struct Hypergraph {
  std::uint32_t num_vertices = 0;  // n
  std::uint32_t num_edges = 0;     // m
  std::vector<offset_t> vertex_offsets;     // n+1 entries into vertex_incidence
  std::vector<edge_id> vertex_incidence;    // kappa entries, grouped by vertex
  std::vector<offset_t> edge_offsets;       // m+1 entries into edge_members
  std::vector<vertex_id> edge_members;      // kappa entries, grouped by edge
  std::vector<double> base_weights;         // m entries, all > 0

  std::uint32_t degree(vertex_id v) const {
    return static_cast<std::uint32_t>(vertex_offsets[v + 1] - vertex_offsets[v]);
  }
  std::uint32_t edge_size(edge_id e) const {
    return static_cast<std::uint32_t>(edge_offsets[e + 1] - edge_offsets[e]);
  }
  std::span<const edge_id> edges_of(vertex_id v) const {
    return {vertex_incidence.data() + vertex_offsets[v], degree(v)};
  }
  std::span<const vertex_id> members_of(edge_id e) const {
    return {edge_members.data() + edge_offsets[e], edge_size(e)};
  }
  offset_t pin_count() const { return static_cast<offset_t>(edge_members.size()); }
  bool empty() const { return num_edges == 0; }

  bool operator==(const Hypergraph&) const = default;
};

struct HypergraphStats {
  std::uint32_t n = 0;
  std::uint32_t m = 0;
  offset_t kappa = 0;
  std::uint32_t max_degree = 0;  // Delta
  std::uint32_t rank = 0;        // d, largest edge size

  bool operator==(const HypergraphStats&) const = default;
};

enum class DegreeZeroPolicy : std::uint8_t {
  reject,             // isolated vertices are an input error
  drop_and_renumber,  // silently remove them and renumber densely
};

struct BuildOptions {
  std::optional<std::uint32_t> num_vertices;  // inferred as max id + 1 if unset
  DegreeZeroPolicy degree_zero = DegreeZeroPolicy::reject;
};

inline HypergraphStats compute_stats(const Hypergraph& h) {
  HypergraphStats s;
  s.n = h.num_vertices;
  s.m = h.num_edges;
  s.kappa = h.pin_count();
  for (vertex_id v = 0; v < h.num_vertices; ++v)
    s.max_degree = std::max(s.max_degree, h.degree(v));
  for (edge_id e = 0; e < h.num_edges; ++e)
    s.rank = std::max(s.rank, h.edge_size(e));
  return s;
}

inline Hypergraph build_hypergraph(const std::vector<std::vector<vertex_id>>& edge_lists,
                                   const std::vector<double>& weights = {},
                                   const BuildOptions& opts = {}) {
  const std::size_t m = edge_lists.size();
  if (!weights.empty() && weights.size() != m)
    throw input_error("weight list length " + std::to_string(weights.size()) +
                      " does not match edge count " + std::to_string(m));

  vertex_id max_id = 0;
  bool any_vertex = false;
  offset_t kappa = 0;
  for (std::size_t e = 0; e < m; ++e) {
    const auto& members = edge_lists[e];
    if (members.empty()) throw input_error("edge " + std::to_string(e) + " is empty");
    kappa += members.size();
    for (vertex_id v : members) {
      max_id = std::max(max_id, v);
      any_vertex = true;
    }
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = i + 1; j < members.size(); ++j)
        if (members[i] == members[j])
          throw input_error("edge " + std::to_string(e) + " lists vertex " +
                            std::to_string(members[i]) + " more than once");
  }
  for (std::size_t e = 0; e < weights.size(); ++e)
    if (!(weights[e] > 0.0))
      throw input_error("edge " + std::to_string(e) + " has non-positive weight");

  std::uint32_t n = opts.num_vertices.value_or(any_vertex ? max_id + 1 : 0);
  if (any_vertex && max_id >= n)
    throw input_error("vertex id " + std::to_string(max_id) + " out of range [0, " +
                      std::to_string(n) + ")");

  std::vector<std::uint32_t> degree(n, 0);
  for (const auto& members : edge_lists)
    for (vertex_id v : members) ++degree[v];

  std::vector<vertex_id> remap;
  std::uint32_t kept = n;
  for (std::uint32_t v = 0; v < n; ++v) {
    if (degree[v] != 0) continue;
    if (opts.degree_zero == DegreeZeroPolicy::reject)
      throw input_error("vertex " + std::to_string(v) + " has degree 0");
    if (remap.empty()) remap.assign(n, kInvalidVertex);
  }
  if (!remap.empty()) {
    kept = 0;
    for (std::uint32_t v = 0; v < n; ++v)
      if (degree[v] != 0) remap[v] = kept++;
  }

  Hypergraph h;
  h.num_vertices = kept;
  h.num_edges = static_cast<std::uint32_t>(m);
  h.edge_offsets.resize(m + 1);
  h.edge_members.resize(kappa);
  h.base_weights = weights.empty() ? std::vector<double>(m, 1.0) : weights;

  offset_t pos = 0;
  for (std::size_t e = 0; e < m; ++e) {
    h.edge_offsets[e] = pos;
    for (vertex_id v : edge_lists[e])
      h.edge_members[pos++] = remap.empty() ? v : remap[v];
  }
  h.edge_offsets[m] = pos;

  h.vertex_offsets.assign(kept + 1, 0);
  for (vertex_id v : h.edge_members) ++h.vertex_offsets[v + 1];
  for (std::uint32_t v = 0; v < kept; ++v) h.vertex_offsets[v + 1] += h.vertex_offsets[v];
  h.vertex_incidence.resize(kappa);
  std::vector<offset_t> cursor(h.vertex_offsets.begin(), h.vertex_offsets.end() - 1);
  for (edge_id e = 0; e < h.num_edges; ++e)
    for (vertex_id v : h.members_of(e)) h.vertex_incidence[cursor[v]++] = e;
  return h;
}

struct ValidationReport {
  struct Violation {
    std::string what;
    offset_t index = 0;  // first offending position
  };
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

// Diagnostic invariant sweep. Never throws; safe on corrupted structures
// because every access is bounds-checked first.
inline ValidationReport validate(const Hypergraph& h) {
  ValidationReport report;
  auto flag = [&](std::string what, offset_t index) {
    report.violations.push_back({std::move(what), index});
  };

  const std::size_t n = h.num_vertices;
  const std::size_t m = h.num_edges;
  bool shape_ok = true;
  if (h.vertex_offsets.size() != n + 1) {
    flag("vertex_offsets length != n+1", h.vertex_offsets.size());
    shape_ok = false;
  }
  if (h.edge_offsets.size() != m + 1) {
    flag("edge_offsets length != m+1", h.edge_offsets.size());
    shape_ok = false;
  }
  if (h.base_weights.size() != m) {
    flag("base_weights length != m", h.base_weights.size());
    shape_ok = false;
  }
  if (!shape_ok) return report;

  if (!h.vertex_offsets.empty() && h.vertex_offsets.front() != 0)
    flag("vertex_offsets[0] != 0", 0);
  if (!h.edge_offsets.empty() && h.edge_offsets.front() != 0)
    flag("edge_offsets[0] != 0", 0);
  for (std::size_t i = 0; i + 1 < h.vertex_offsets.size(); ++i)
    if (h.vertex_offsets[i] > h.vertex_offsets[i + 1]) {
      flag("vertex_offsets decreasing", i);
      return report;
    }
  for (std::size_t i = 0; i + 1 < h.edge_offsets.size(); ++i)
    if (h.edge_offsets[i] > h.edge_offsets[i + 1]) {
      flag("edge_offsets decreasing", i);
      return report;
    }
  bool ends_ok = true;
  if (h.vertex_offsets.back() != h.vertex_incidence.size()) {
    flag("vertex_offsets[n] != incidence length", h.vertex_offsets.back());
    ends_ok = false;
  }
  if (h.edge_offsets.back() != h.edge_members.size()) {
    flag("edge_offsets[m] != member length", h.edge_offsets.back());
    ends_ok = false;
  }
  if (h.vertex_incidence.size() != h.edge_members.size()) {
    flag("incidence and member arrays disagree on kappa", h.vertex_incidence.size());
    ends_ok = false;
  }
  if (!ends_ok) return report;  // ranges cannot be traversed safely

  for (std::size_t i = 0; i < h.vertex_incidence.size(); ++i)
    if (h.vertex_incidence[i] >= m) {
      flag("edge id out of range in vertex_incidence", i);
      return report;
    }
  for (std::size_t i = 0; i < h.edge_members.size(); ++i)
    if (h.edge_members[i] >= n) {
      flag("vertex id out of range in edge_members", i);
      return report;
    }

  for (vertex_id v = 0; v < n; ++v) {
    if (h.degree(v) == 0) {
      flag("vertex of degree 0", v);
      break;
    }
  }

  auto first_duplicate = [](auto span) -> std::optional<std::size_t> {
    for (std::size_t i = 0; i < span.size(); ++i)
      for (std::size_t j = i + 1; j < span.size(); ++j)
        if (span[i] == span[j]) return j;
    return std::nullopt;
  };
  for (edge_id e = 0; e < m; ++e)
    if (auto dup = first_duplicate(h.members_of(e))) {
      flag("duplicate vertex within edge", h.edge_offsets[e] + *dup);
      break;
    }
  for (vertex_id v = 0; v < n; ++v)
    if (auto dup = first_duplicate(h.edges_of(v))) {
      flag("duplicate edge within vertex incidence", h.vertex_offsets[v] + *dup);
      break;
    }

  bool bidir_flagged = false;
  for (edge_id e = 0; e < m && !bidir_flagged; ++e) {
    for (vertex_id v : h.members_of(e)) {
      auto edges = h.edges_of(v);
      if (std::find(edges.begin(), edges.end(), e) == edges.end()) {
        flag("edge lists vertex whose incidence omits the edge", e);
        bidir_flagged = true;
        break;
      }
    }
  }
  for (vertex_id v = 0; v < n && !bidir_flagged; ++v) {
    for (edge_id e : h.edges_of(v)) {
      auto members = h.members_of(e);
      if (std::find(members.begin(), members.end(), v) == members.end()) {
        flag("vertex incidence lists edge that omits the vertex", v);
        bidir_flagged = true;
        break;
      }
    }
  }

  for (std::size_t e = 0; e < m; ++e)
    if (!(h.base_weights[e] > 0.0)) {
      flag("non-positive edge weight", e);
      break;
    }
  return report;
}

}  // namespace hlm
