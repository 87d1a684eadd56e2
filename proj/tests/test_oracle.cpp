#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "test_util.hpp"

using namespace hlm;

TEST_CASE("oracle on a single edge") {
  Hypergraph h = build_hypergraph({{0, 1}}, {2.5});
  auto r = exact_matching(h);
  CHECK(r.optimal_edges == std::vector<edge_id>{0});
  CHECK(r.optimal_weight == 2.5);
}

TEST_CASE("oracle on the tight family takes all pair edges") {
  Hypergraph h = generate_tight_family(3, 0.1);
  auto r = exact_matching(h);
  CHECK(r.optimal_edges == std::vector<edge_id>{0, 1, 2});
  CHECK_THAT(r.optimal_weight, Catch::Matchers::WithinAbs(3.0, 1e-12));
}

TEST_CASE("branch and bound equals the unpruned enumerator") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const std::uint32_t m = 2 + static_cast<std::uint32_t>(rng() % 11);  // <= 12
    Hypergraph h = testutil::random_instance(9000 + trial, 9, m, 2, 3);
    if (trial % 2 == 0) h.base_weights = random_weights_1_100(h.num_edges, trial);

    auto fast = exact_matching(h);
    auto slow = testutil::naive_enumerate(h);
    CHECK(fast.optimal_edges == slow.optimal_edges);
    CHECK_THAT(fast.optimal_weight, Catch::Matchers::WithinAbs(slow.optimal_weight, 1e-12));
    CHECK(fast.explored > 0);
  }
}

TEST_CASE("ties resolve to the lexicographically smallest set") {
  // two parallel edges: either one alone is optimal, id 0 must win
  Hypergraph h = build_hypergraph({{0, 1}, {0, 1}}, {1.0, 1.0});
  CHECK(exact_matching(h).optimal_edges == std::vector<edge_id>{0});
  CHECK(testutil::naive_enumerate(h).optimal_edges == std::vector<edge_id>{0});
}

TEST_CASE("edge cap is enforced") {
  std::vector<std::vector<vertex_id>> lists;
  for (vertex_id i = 0; i < 23; ++i) lists.push_back({2 * i, 2 * i + 1});
  Hypergraph h = build_hypergraph(lists);
  CHECK_THROWS_AS(exact_matching(h), input_error);
  CHECK_NOTHROW(exact_matching(h, {}, 23));
}

TEST_CASE("verify_matching flags") {
  Hypergraph tight = generate_tight_family(3, 0.1);

  auto [matched, report] = local_max_sequential(tight, testutil::zero_noise_stream(1));
  auto good = verify_matching(tight, matched);
  CHECK(good.disjoint);
  CHECK(good.maximal);

  Matching one_pair;
  one_pair.matched_edges = {0};
  auto partial = verify_matching(tight, one_pair);
  CHECK(partial.disjoint);
  CHECK_FALSE(partial.maximal);

  Matching overlapping;
  overlapping.matched_edges = {0, 3};  // pair {x1,y1} and the heavy edge share x1
  auto bad = verify_matching(tight, overlapping);
  CHECK_FALSE(bad.disjoint);

  Matching out_of_range;
  out_of_range.matched_edges = {17};
  CHECK_THROWS_AS(verify_matching(tight, out_of_range), input_error);
}

TEST_CASE("verify_matching agrees with definition-level recomputation on fuzzed subsets") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    Hypergraph h = testutil::random_instance(400 + trial, 12, 10, 2, 3);
    Matching m;
    for (edge_id e = 0; e < h.num_edges; ++e)
      if (rng() % 3 == 0) m.matched_edges.push_back(e);
    auto report = verify_matching(h, m);
    CHECK(report.disjoint == testutil::is_disjoint(h, m.matched_edges));
    CHECK(report.maximal == testutil::is_maximal(h, m.matched_edges));
    double w = 0;
    for (edge_id e : m.matched_edges) w += h.base_weights[e];
    CHECK_THAT(report.weight, Catch::Matchers::WithinAbs(w, 1e-12));
  }
}

TEST_CASE("approximation ratio values") {
  Hypergraph tight = generate_tight_family(3, 0.1);
  auto exact = exact_matching(tight);

  Matching opt;
  opt.matched_edges = exact.optimal_edges;
  opt.total_weight = exact.optimal_weight;
  CHECK_THAT(approximation_ratio(tight, opt, exact), Catch::Matchers::WithinAbs(1.0, 1e-12));

  auto [local, report] = local_max_sequential(tight, testutil::zero_noise_stream(1));
  CHECK_THAT(approximation_ratio(tight, local, exact),
             Catch::Matchers::WithinAbs(1.1 / 3.0, 1e-12));

  Hypergraph empty = build_hypergraph({});
  auto empty_exact = exact_matching(empty);
  Matching nothing;
  CHECK_THROWS_AS(approximation_ratio(empty, nothing, empty_exact), input_error);
}

TEST_CASE("oracle dominates every matcher on small random instances") {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    Hypergraph h = testutil::random_instance(seed, 10, 9, 2, 3);
    h.base_weights = random_weights_1_100(h.num_edges, seed);
    auto exact = exact_matching(h);
    const auto d = compute_stats(h).rank;
    WeightStream s = testutil::zero_noise_stream(seed);
    for (auto variant : {Variant::seq, Variant::crcw, Variant::crew, Variant::work_optimal}) {
      ParallelConfig cfg;
      cfg.variant = variant;
      cfg.workers = 2;
      auto [m, report] = run_variant(h, s, cfg);
      CHECK(m.total_weight <= exact.optimal_weight + 1e-12);
      const double ratio = approximation_ratio(h, m, exact);
      CHECK(ratio >= 1.0 / d - 1e-12);
    }
  }
}
