#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "test_util.hpp"

using namespace hlm;

TEST_CASE("single edge instance") {
  Hypergraph h = build_hypergraph({{0, 1}});
  auto s = compute_stats(h);
  CHECK(s.n == 2);
  CHECK(s.m == 1);
  CHECK(s.kappa == 2);
  CHECK(s.max_degree == 1);
  CHECK(s.rank == 2);
  CHECK(h.base_weights == std::vector<double>{1.0});
  CHECK(validate(h).ok());
}

TEST_CASE("tight family d=3 layout") {
  Hypergraph h = build_hypergraph({{0, 3}, {1, 4}, {2, 5}, {0, 1, 2}}, {1, 1, 1, 1.1});
  auto s = compute_stats(h);
  CHECK(s == HypergraphStats{6, 4, 9, 2, 3});
  CHECK(validate(h).ok());
  CHECK(h == generate_tight_family(3, 0.1));
}

TEST_CASE("build input errors") {
  CHECK_THROWS_AS(build_hypergraph({{}}), input_error);
  CHECK_THROWS_AS(build_hypergraph({{0, 0}}), input_error);
  CHECK_THROWS_AS(build_hypergraph({{0, 1}}, {0.0}), input_error);
  CHECK_THROWS_AS(build_hypergraph({{0, 1}}, {-2.0}), input_error);
  CHECK_THROWS_AS(build_hypergraph({{0, 1}}, {1.0, 1.0}), input_error);
}

TEST_CASE("degree-0 vertices rejected or renumbered") {
  // vertex 1 unused
  std::vector<std::vector<vertex_id>> lists = {{0, 2}};
  CHECK_THROWS_AS(build_hypergraph(lists), input_error);

  BuildOptions opts;
  opts.degree_zero = DegreeZeroPolicy::drop_and_renumber;
  Hypergraph h = build_hypergraph(lists, {}, opts);
  CHECK(h.num_vertices == 2);
  CHECK(std::vector<vertex_id>(h.members_of(0).begin(), h.members_of(0).end()) ==
        std::vector<vertex_id>{0, 1});
  CHECK(validate(h).ok());
}

TEST_CASE("stats match independent recount on random instances") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 100; ++trial) {
    const std::uint32_t n = 4 + static_cast<std::uint32_t>(rng() % 30);
    const std::uint32_t m = 1 + static_cast<std::uint32_t>(rng() % 25);
    auto lists = testutil::random_edge_lists(rng, n, m, 1, std::min(4u, n));
    BuildOptions opts;
    opts.num_vertices = n;
    opts.degree_zero = DegreeZeroPolicy::drop_and_renumber;
    Hypergraph h = build_hypergraph(lists, {}, opts);
    REQUIRE(validate(h).ok());

    // recount from the raw lists
    std::vector<std::uint32_t> deg(n, 0);
    offset_t kappa = 0;
    std::uint32_t rank = 0;
    for (const auto& members : lists) {
      kappa += members.size();
      rank = std::max(rank, static_cast<std::uint32_t>(members.size()));
      for (vertex_id v : members) ++deg[v];
    }
    std::uint32_t used = 0, max_deg = 0;
    for (std::uint32_t v = 0; v < n; ++v) {
      if (deg[v] > 0) ++used;
      max_deg = std::max(max_deg, deg[v]);
    }

    auto s = compute_stats(h);
    CHECK(s.n == used);
    CHECK(s.m == m);
    CHECK(s.kappa == kappa);
    CHECK(s.max_degree == max_deg);
    CHECK(s.rank == rank);
    CHECK(s.kappa <= std::min<offset_t>(offset_t{s.max_degree} * s.n, offset_t{s.rank} * s.m));
    CHECK(compute_stats(h) == s);  // pure

    offset_t degree_sum = 0, size_sum = 0;
    for (vertex_id v = 0; v < h.num_vertices; ++v) degree_sum += h.degree(v);
    for (edge_id e = 0; e < h.num_edges; ++e) size_sum += h.edge_size(e);
    CHECK(degree_sum == size_sum);
    CHECK(degree_sum == s.kappa);
  }
}

TEST_CASE("line graph basics") {
  Hypergraph two = build_hypergraph({{0, 1}, {2, 3}});
  LineGraph lg = build_line_graph(two);
  CHECK(lg.num_nodes == 2);
  CHECK(lg.adjacency[0].empty());
  CHECK(lg.adjacency[1].empty());

  Hypergraph tight = generate_tight_family(3, 0.1);
  LineGraph tl = build_line_graph(tight);
  CHECK(tl.adjacency[3] == std::vector<edge_id>{0, 1, 2});  // heavy edge meets every pair edge
  for (edge_id pair = 0; pair < 3; ++pair)
    CHECK(tl.adjacency[pair] == std::vector<edge_id>{3});
}

TEST_CASE("line graph equals pairwise intersection oracle") {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    Hypergraph h = testutil::random_instance(seed, 15, 20, 2, 4);
    CHECK(build_line_graph(h) == testutil::brute_force_line_graph(h));
  }
}

TEST_CASE("validate flags a bidirectional inconsistency") {
  Hypergraph h = build_hypergraph({{0, 1}, {1, 2}});
  REQUIRE(validate(h).ok());
  // redirect vertex 0's only incidence entry to the wrong edge
  h.vertex_incidence[h.vertex_offsets[0]] = 1;
  auto report = validate(h);
  REQUIRE_FALSE(report.ok());
}

TEST_CASE("validate detects fuzzed corruptions") {
  std::mt19937_64 rng(7);
  int detected = 0;
  for (int trial = 0; trial < 50; ++trial) {
    Hypergraph h = testutil::random_instance(1000 + trial, 12, 10, 2, 4);
    REQUIRE(validate(h).ok());
    switch (trial % 5) {
      case 0:
        h.base_weights[rng() % h.num_edges] = -1.0;
        break;
      case 1: {  // duplicate a member inside an edge of size >= 2
        edge_id e = 0;
        while (h.edge_size(e) < 2) ++e;
        h.edge_members[h.edge_offsets[e]] = h.edge_members[h.edge_offsets[e] + 1];
        break;
      }
      case 2:
        h.edge_members[rng() % h.edge_members.size()] = h.num_vertices + 3;
        break;
      case 3:
        h.vertex_incidence[rng() % h.vertex_incidence.size()] = h.num_edges + 1;
        break;
      case 4:
        h.vertex_offsets.back() += 1;
        break;
    }
    if (!validate(h).ok()) ++detected;
  }
  CHECK(detected == 50);
}

TEST_CASE("empty hypergraph is valid and has zero stats") {
  Hypergraph h = build_hypergraph({});
  CHECK(validate(h).ok());
  CHECK(compute_stats(h) == HypergraphStats{0, 0, 0, 0, 0});
}
