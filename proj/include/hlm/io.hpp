#pragma once

// Text formats: hMetis-style .hgr hypergraphs, METIS-style graphs read as
// 2-uniform hypergraphs, and the matching output format. All parsers are
// line oriented, treat '%' lines as comments, and shift 1-based ids to the
// dense 0-based ids used internally.

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "hlm/hypergraph.hpp"
#include "hlm/matching.hpp"

namespace hlm {

namespace detail {

inline bool next_content_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    std::size_t i = line.find_first_not_of(" \t\r");
    if (i == std::string::npos) continue;  // blank
    if (line[i] == '%') continue;          // comment
    return true;
  }
  return false;
}

inline std::vector<std::string_view> split_tokens(const std::string& line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) tokens.push_back(std::string_view(line).substr(i, j - i));
    i = j;
  }
  return tokens;
}

inline std::uint64_t parse_uint(std::string_view tok, const char* what) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw input_error(std::string("expected unsigned integer for ") + what + ", got '" +
                      std::string(tok) + "'");
  return value;
}

inline double parse_weight(std::string_view tok) {
  // from_chars<double> keeps integer weights exact and parsing locale-free.
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size() || !std::isfinite(value))
    throw input_error("malformed edge weight '" + std::string(tok) + "'");
  if (!(value > 0.0)) throw input_error("edge weight must be positive, got " + std::string(tok));
  return value;
}

}  // namespace detail

struct ParseOptions {
  DegreeZeroPolicy degree_zero = DegreeZeroPolicy::reject;
  std::vector<std::string>* warnings = nullptr;  // optional sink
};

// hMetis convention: header "m n [fmt]"; fmt 1/11 puts an edge weight first
// on each edge line; fmt 10/11 appends n vertex-weight lines, which carry no
// meaning for matching and are skipped with a warning. Vertex ids are
// 1-based in the file.
inline Hypergraph parse_hgr(std::istream& in, const ParseOptions& opts = {}) {
  std::string line;
  if (!detail::next_content_line(in, line)) throw input_error("missing hgr header line");
  auto header = detail::split_tokens(line);
  if (header.size() < 2 || header.size() > 3)
    throw input_error("malformed hgr header '" + line + "'");
  const auto m = detail::parse_uint(header[0], "edge count");
  const auto n = detail::parse_uint(header[1], "vertex count");
  std::uint64_t fmt = header.size() == 3 ? detail::parse_uint(header[2], "fmt code") : 0;
  if (fmt != 0 && fmt != 1 && fmt != 10 && fmt != 11)
    throw input_error("unsupported hgr fmt code " + std::to_string(fmt));
  const bool has_edge_weights = fmt == 1 || fmt == 11;
  const bool has_vertex_weights = fmt == 10 || fmt == 11;

  std::vector<std::vector<vertex_id>> edges;
  std::vector<double> weights;
  edges.reserve(m);
  if (has_edge_weights) weights.reserve(m);
  for (std::uint64_t e = 0; e < m; ++e) {
    if (!detail::next_content_line(in, line))
      throw input_error("unexpected end of file: edge " + std::to_string(e + 1) + " of " +
                        std::to_string(m) + " missing");
    auto tokens = detail::split_tokens(line);
    std::size_t first = 0;
    if (has_edge_weights) {
      if (tokens.empty()) throw input_error("edge line " + std::to_string(e + 1) + " is empty");
      weights.push_back(detail::parse_weight(tokens[0]));
      first = 1;
    }
    if (tokens.size() <= first)
      throw input_error("edge line " + std::to_string(e + 1) + " lists no vertices");
    std::vector<vertex_id> members;
    members.reserve(tokens.size() - first);
    for (std::size_t i = first; i < tokens.size(); ++i) {
      const auto id = detail::parse_uint(tokens[i], "vertex id");
      if (id < 1 || id > n)
        throw input_error("vertex id " + std::to_string(id) + " outside [1, " +
                          std::to_string(n) + "] on edge line " + std::to_string(e + 1));
      members.push_back(static_cast<vertex_id>(id - 1));
    }
    edges.push_back(std::move(members));
  }
  if (has_vertex_weights) {
    for (std::uint64_t v = 0; v < n; ++v)
      if (!detail::next_content_line(in, line))
        throw input_error("unexpected end of file in vertex weight block");
    if (opts.warnings)
      opts.warnings->push_back("vertex weights present but ignored; matching does not use them");
  }
  if (detail::next_content_line(in, line))
    throw input_error("trailing content after declared edges: '" + line + "'");

  BuildOptions build;
  build.num_vertices = static_cast<std::uint32_t>(n);
  build.degree_zero = opts.degree_zero;
  return build_hypergraph(edges, weights, build);
}

inline Hypergraph parse_hgr(const std::string& text, const ParseOptions& opts = {}) {
  std::istringstream in(text);
  return parse_hgr(in, opts);
}

// Weights are written in shortest round-trip form, so write/parse reproduces
// doubles exactly and integral weights print as integers.
inline void write_hgr(const Hypergraph& h, std::ostream& out) {
  bool weighted = false;
  for (double w : h.base_weights) weighted |= (w != 1.0);
  out << h.num_edges << ' ' << h.num_vertices;
  if (weighted) out << " 1";
  out << '\n';
  char buf[64];
  for (edge_id e = 0; e < h.num_edges; ++e) {
    if (weighted) {
      const double w = h.base_weights[e];
      if (w == static_cast<double>(static_cast<std::int64_t>(w))) {
        std::snprintf(buf, sizeof(buf), "%lld", static_cast<long long>(w));
        out << buf;
      } else {
        auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), w);
        out.write(buf, ptr - buf);
        (void)ec;
      }
    }
    bool lead = !weighted;
    for (vertex_id v : h.members_of(e)) {
      if (!lead) out << ' ';
      lead = false;
      out << (v + 1);
    }
    out << '\n';
  }
}

// METIS convention: header "n m [fmt]"; one 1-based adjacency line per
// vertex; the graph must be symmetric and loop free. Every undirected edge
// {u, v} becomes one 2-uniform hyperedge.
inline Hypergraph parse_metis_graph(std::istream& in, const ParseOptions& opts = {}) {
  std::string line;
  if (!detail::next_content_line(in, line)) throw input_error("missing graph header line");
  auto header = detail::split_tokens(line);
  if (header.size() < 2 || header.size() > 3)
    throw input_error("malformed graph header '" + line + "'");
  const auto n = detail::parse_uint(header[0], "vertex count");
  const auto m = detail::parse_uint(header[1], "edge count");
  if (header.size() == 3 && detail::parse_uint(header[2], "fmt code") != 0)
    throw input_error("weighted graph fmt codes are not supported");

  std::vector<std::vector<vertex_id>> adjacency(n);
  for (std::uint64_t u = 0; u < n; ++u) {
    if (!std::getline(in, line))
      throw input_error("unexpected end of file: adjacency line " + std::to_string(u + 1) +
                        " missing");
    if (!line.empty() && line.find_first_not_of(" \t\r") != std::string::npos &&
        line[line.find_first_not_of(" \t\r")] == '%') {
      --u;  // comment lines do not consume a vertex slot
      continue;
    }
    auto tokens = detail::split_tokens(line);
    auto& adj = adjacency[u];
    adj.reserve(tokens.size());
    for (auto tok : tokens) {
      const auto id = detail::parse_uint(tok, "neighbor id");
      if (id < 1 || id > n)
        throw input_error("neighbor id " + std::to_string(id) + " outside [1, " +
                          std::to_string(n) + "] on line for vertex " + std::to_string(u + 1));
      if (id - 1 == u) throw input_error("self-loop at vertex " + std::to_string(u + 1));
      adj.push_back(static_cast<vertex_id>(id - 1));
    }
    std::sort(adj.begin(), adj.end());
    adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
  }

  std::vector<std::vector<vertex_id>> edges;
  edges.reserve(m);
  for (std::uint64_t u = 0; u < n; ++u) {
    for (vertex_id v : adjacency[u]) {
      const auto& back = adjacency[v];
      if (!std::binary_search(back.begin(), back.end(), static_cast<vertex_id>(u)))
        throw input_error("asymmetric adjacency: vertex " + std::to_string(u + 1) + " lists " +
                          std::to_string(v + 1) + " but not vice versa");
      if (u < v) edges.push_back({static_cast<vertex_id>(u), v});
    }
  }
  if (edges.size() != m)
    throw input_error("header declares " + std::to_string(m) + " edges but adjacency encodes " +
                      std::to_string(edges.size()));

  BuildOptions build;
  build.num_vertices = static_cast<std::uint32_t>(n);
  build.degree_zero = opts.degree_zero;
  return build_hypergraph(edges, {}, build);
}

inline Hypergraph parse_metis_graph(const std::string& text, const ParseOptions& opts = {}) {
  std::istringstream in(text);
  return parse_metis_graph(in, opts);
}

// One matched edge id per line, ascending, preceded by a small comment
// header. Ids are the instance's original 0-based edge ids.
inline void write_matching(const Matching& m, std::ostream& out) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", m.total_weight);
  out << "% weight " << buf << '\n';
  out << "% size " << m.matched_edges.size() << '\n';
  out << "% rounds " << m.rounds_used << '\n';
  for (edge_id e : m.matched_edges) out << e << '\n';
}

inline std::vector<edge_id> parse_matching(std::istream& in) {
  std::vector<edge_id> edges;
  std::string line;
  while (detail::next_content_line(in, line)) {
    for (auto tok : detail::split_tokens(line))
      edges.push_back(static_cast<edge_id>(detail::parse_uint(tok, "edge id")));
  }
  return edges;
}

inline Hypergraph load_instance_file(const std::string& path, bool metis,
                                     const ParseOptions& opts = {}) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open instance file " + path);
  return metis ? parse_metis_graph(in, opts) : parse_hgr(in, opts);
}

}  // namespace hlm
