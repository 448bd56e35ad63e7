#include <catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "chaindec/fixtures.hpp"
#include "chaindec/patterns.hpp"
#include "support/brute.hpp"

using namespace chaindec;
namespace fx = chaindec::fixtures;

TEST_CASE("induced paths in the fixtures") {
  const auto w = find_induced_path(fx::p7(), 7);
  REQUIRE(w);
  CHECK(w->vertices == std::vector<VertexId>{1, 2, 3, 4, 5, 6, 7});
  CHECK_FALSE(is_p7_free(fx::p7()));

  CHECK_FALSE(find_induced_path(fx::g8(), 7));
  CHECK(is_p7_free(fx::g8()));
  const auto p6 = find_induced_path(fx::g8(), 6);
  REQUIRE(p6);
  CHECK(is_induced_path(fx::g8(), p6->vertices));
  CHECK(is_induced_path(fx::g8(), {3, 7, 4, 5, 2, 6}));

  CHECK(is_p7_free(fx::c6()));
  CHECK(is_p7_free(fx::path(6)));
  CHECK_FALSE(is_p7_free(fx::path(9)));
  CHECK(is_p7_free(fx::biclique(6, 6)));
}

TEST_CASE("is_induced_path rejects chords, gaps and repeats") {
  const BipartiteGraph c6 = fx::c6();
  CHECK(is_induced_path(c6, {1, 2, 3, 4, 5}));
  CHECK_FALSE(is_induced_path(c6, {1, 2, 3, 4, 5, 6}));  // chord 6-1
  CHECK_FALSE(is_induced_path(c6, {1, 3}));
  CHECK_FALSE(is_induced_path(c6, {1, 2, 1}));
  CHECK(is_induced_path(c6, {4}));
}

TEST_CASE("k = 0 is rejected") {
  CHECK_THROWS_AS(find_induced_path(fx::k2(), 0), Error);
}

TEST_CASE("find_induced_path agrees with the permutation oracle") {
  std::mt19937 rng(7);
  for (int round = 0; round < 300; ++round) {
    const std::size_t n = 2 + round % 7;  // up to 8 vertices
    const BipartiteGraph g = brute::random_bipartite(rng, n, 0.25 + (round % 4) * 0.15);
    INFO(g);
    bool absent_before = false;
    for (std::size_t k = 1; k <= n; ++k) {
      const auto mine = find_induced_path(g, k);
      const auto ref = brute::induced_path(g, k);
      REQUIRE(mine.has_value() == ref.has_value());
      if (mine) {
        CHECK(mine->vertices == *ref);
        CHECK(brute::chordless(g, mine->vertices));
        CHECK_FALSE(absent_before);  // no P_k means no longer ones either
      } else {
        absent_before = absent_before || k >= 2;
      }
    }
    CHECK(is_p7_free(g) == !brute::induced_path(g, 7));
  }
}

TEST_CASE("every labelled copy of P7 is detected") {
  std::vector<VertexId> perm{1, 2, 3, 4, 5, 6, 7};
  std::mt19937 rng(99);
  for (int round = 0; round < 50; ++round) {
    std::shuffle(perm.begin(), perm.end(), rng);
    GraphBuilder b;
    for (std::size_t i = 0; i < 7; ++i) b.add_vertex(perm[i], i % 2 == 0 ? Side::Left : Side::Right);
    for (std::size_t i = 0; i + 1 < 7; ++i) b.add_edge(perm[i], perm[i + 1]);
    const BipartiteGraph g = std::move(b).build();
    const auto w = find_induced_path(g, 7);
    REQUIRE(w);
    CHECK(brute::chordless(g, w->vertices));
    CHECK(w->vertices.front() == std::min(perm.front(), perm.back()));
  }
}
