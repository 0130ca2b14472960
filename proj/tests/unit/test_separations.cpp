#include <doctest.h>

#include "test_support.hpp"
#include "twsep/menger.hpp"
#include "twsep/separations.hpp"

using namespace twsep;

TEST_CASE("stz_separation assigns S-components to X") {
  const Graph p5 = gen::path(5);
  const Separation sep = stz_separation(p5, {0}, {2}, {4});
  CHECK(sep.a_side == VertexSet{0, 1, 2});
  CHECK(sep.b_side == VertexSet{2, 3, 4});
  CHECK(error_code_of([&] { stz_separation(p5, {0}, {}, {4}); }) == ErrorCode::kNotSeparated);

  gen::Rng rng(8);
  for (int round = 0; round < 200; ++round) {
    const std::size_t n = 2 + rng.below(10);
    const Graph g = gen::gnp(n, 0.3, rng);
    const VertexSet s = random_subset(n, rng, 30);
    const VertexSet t = random_subset(n, rng, 30);
    const PathResult r = disjoint_paths(g, s, t, n);
    REQUIRE(r.separator);
    const Separation xy = stz_separation(g, s, *r.separator, t);
    const SeparationCheck check = check_separation(g, xy.a_side, xy.b_side);
    CHECK(check.valid);
    CHECK(check.order == r.separator->size());
    CHECK(is_subset(s, xy.a_side));
    CHECK(is_subset(t, xy.b_side));
  }
}

TEST_CASE("min_balanced_separation on small graphs") {
  const Separation k1 = min_balanced_separation(gen::complete(1));
  CHECK(k1.a_side == VertexSet{0});
  CHECK(k1.b_side == VertexSet{0});
  CHECK(min_balanced_separation(gen::complete(6)).order() == 2);
  // Tie-break: smallest separator, components to the A-side first.
  const Separation k2 = min_balanced_separation(gen::complete(2));
  CHECK(k2.a_side == VertexSet{0, 1});
  CHECK(k2.b_side == VertexSet{0});

  gen::Rng rng(9);
  for (int round = 0; round < 150; ++round) {
    const Graph g = gen::gnp(1 + rng.below(8), 0.35, rng);
    const Separation sep = min_balanced_separation(g);
    CHECK(check_separation(g, sep.a_side, sep.b_side).valid);
    CHECK(is_balanced(g, sep));
    CHECK(sep.order() == brute_min_balanced_order(g));
  }
}

TEST_CASE("min_w_balanced_separation is minimum among W-balanced separations") {
  gen::Rng rng(10);
  for (int round = 0; round < 100; ++round) {
    const std::size_t n = 1 + rng.below(7);
    const Graph g = gen::gnp(n, 0.4, rng);
    const VertexSet w = random_subset(n, rng, 50);
    const Separation sep = min_w_balanced_separation(g, w);
    REQUIRE(check_separation(g, sep.a_side, sep.b_side).valid);
    CHECK(is_w_balanced(g, sep, w));
    // brute force over all 3^n assignments
    std::size_t best = n;
    std::vector<int> side(n, 0);
    while (true) {
      std::vector<Vertex> a, b;
      for (Vertex v = 0; v < n; ++v) {
        if (side[v] <= 1) a.push_back(v);
        if (side[v] >= 1) b.push_back(v);
      }
      const Separation candidate{VertexSet(a), VertexSet(b)};
      if (check_separation(g, candidate.a_side, candidate.b_side).valid &&
          is_w_balanced(g, candidate, w)) {
        best = std::min(best, candidate.order());
      }
      std::size_t i = 0;
      while (i < n && side[i] == 2) side[i++] = 0;
      if (i == n) break;
      ++side[i];
    }
    CHECK(sep.order() == best);
  }
}

TEST_CASE("balanced_separation_within follows the requested bound") {
  const Graph p4 = gen::path(4);
  const SeparatorOracleOutcome within = balanced_separation_within(p4, 1);
  REQUIRE(within.separation);
  CHECK(within.separation->order() <= 1);
  CHECK(within.certified);

  const SeparatorOracleOutcome none = balanced_separation_within(gen::complete(6), 1);
  CHECK_FALSE(none.separation);
  CHECK(none.witness == VertexSet::range(6));
  CHECK(none.certified);

  const Graph k4 = gen::complete(4);
  const SeparatorOracleOutcome loose = balanced_separation_within(k4, 10);
  REQUIRE(loose.separation);
  CHECK(loose.separation->order() == 2);

  OracleOptions heuristic;
  heuristic.mode = OracleMode::kHeuristic;
  const SeparatorOracleOutcome h = balanced_separation_within(gen::grid(6, 6), 12, heuristic);
  REQUIRE(h.separation);
  CHECK(is_balanced(gen::grid(6, 6), *h.separation));
  CHECK_FALSE(h.certified);

  OracleOptions exact;
  exact.mode = OracleMode::kExact;
  exact.enumeration_budget = 10;
  CHECK(error_code_of([&] { balanced_separation_within(gen::grid(6, 6), 5, exact); }) ==
        ErrorCode::kSizeLimitExceeded);
}

TEST_CASE("separation_number agrees with brute force and known values") {
  for (std::size_t n = 1; n <= 9; ++n) {
    CHECK(separation_number(gen::complete(n)) == (n + 2) / 3);
  }
  CHECK(separation_number(gen::path(10)) == 1);
  CHECK(separation_number(gen::cycle(8)) == 2);
  CHECK(error_code_of([] { separation_number(gen::path(15)); }) ==
        ErrorCode::kSizeLimitExceeded);

  gen::Rng rng(12);
  for (int round = 0; round < 25; ++round) {
    const Graph g = gen::gnp(1 + rng.below(7), 0.4, rng);
    const std::size_t sep = separation_number(g);
    CHECK(sep == brute_separation_number(g));
    CHECK(sep >= 1);
    CHECK(min_balanced_separation(g).order() <= sep);
    const InducedSubgraph sub = induced_subgraph(g, random_subset(g.num_vertices(), rng, 60));
    if (sub.graph.num_vertices() > 0) CHECK(separation_number(sub.graph) <= sep);
  }
}

TEST_CASE("candidate_count sums binomials") {
  CHECK(candidate_count(5, 0) == 1);
  CHECK(candidate_count(5, 2) == 1 + 5 + 10);
  CHECK(candidate_count(5, 9) == 32);
}
