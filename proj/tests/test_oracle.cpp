#include <catch_amalgamated.hpp>

#include <json.hpp>

#include "chaindec/codec.hpp"
#include "chaindec/fixtures.hpp"
#include "chaindec/oracle.hpp"
#include "chaindec/patterns.hpp"
#include "support/brute.hpp"

using namespace chaindec;
namespace fx = chaindec::fixtures;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("small class counts") {
  CHECK(count_class(1).value == 1);
  CHECK(count_class(2).value == 2);
  CHECK(count_class(3).value == 7);
  CHECK(count_class(0).value == 1);
  const auto reference = brute::bipartite_counts(7);
  for (std::size_t n = 1; n <= 6; ++n) {
    INFO("n = " << n);
    CHECK(count_class(n).value == reference[n]);
    CHECK(bipartite_count(n) == reference[n]);
  }
}

TEST_CASE("seven vertices: only the labelled paths drop out") {
  const auto reference = brute::bipartite_counts(7);
  OracleOptions two;
  two.workers = 2;
  const std::uint64_t all = bipartite_count(7, two);
  CHECK(all == reference[7]);
  CHECK(count_class(7, two).value == all - 2520);
}

TEST_CASE("the cap is enforced") {
  CHECK(code_of([] { count_class(8); }) == ErrorCode::CapExceeded);
  CHECK(code_of([] { verify_class(8); }) == ErrorCode::CapExceeded);
  OracleOptions wide;
  wide.cap = 40;
  CHECK(code_of([&] { count_class(12, wide); }) == ErrorCode::CapExceeded);
}

TEST_CASE("canonical bipartition of an edge mask") {
  // Pairs on 3 vertices: (1,2) (1,3) (2,3).
  CHECK_FALSE(canonical_bipartite_graph(3, 0b111));
  const auto path = canonical_bipartite_graph(3, 0b101);  // 1-2, 2-3
  REQUIRE(path);
  CHECK(path->left() == VertexSet{1, 3});
  CHECK(path->right() == VertexSet{2});
  const auto lonely = canonical_bipartite_graph(4, 0b100000);  // 3-4 only
  REQUIRE(lonely);
  CHECK(lonely->left() == VertexSet{1, 2, 3});
  CHECK(pair_count(7) == 21);
}

TEST_CASE("verify_class finds nothing wrong on small n") {
  for (std::size_t n = 1; n <= 5; ++n) {
    const ClassReport r = verify_class(n);
    INFO(r.to_text());
    CHECK(r.ok());
    CHECK(r.enumerated == (std::uint64_t{1} << pair_count(n)));
    CHECK(r.members == count_class(n).value);
    CHECK(r.checked == r.members);
    CHECK(r.max_nodes <= node_bound(n));
  }
  CHECK(verify_class(4).members == 41);
}

TEST_CASE("worker count does not change the report") {
  OracleOptions three;
  three.workers = 3;
  const ClassReport a = verify_class(6);
  const ClassReport b = verify_class(6, three);
  CHECK(a.to_json() == b.to_json());
  CHECK(a.failures.empty());
  const auto j = nlohmann::json::parse(a.to_json());
  CHECK(j["members"] == 5177);
  CHECK(j["n"] == 6);
}

TEST_CASE("a corpus spiked with P7 fails exactly at the spikes") {
  const std::vector<BipartiteGraph> corpus{fx::g8(), fx::p7(), fx::two_k2(), fx::c6(), fx::p7(), fx::six_vertex()};
  const ClassReport r = verify_corpus(corpus);
  REQUIRE(r.failures.size() == 2);
  CHECK(r.failures[0].index == 2);
  CHECK(r.failures[1].index == 5);
  CHECK(r.failures[0].message.find("NotQuasiThreshold") != std::string::npos);
  CHECK(r.to_text().find("FAIL index=2") != std::string::npos);
}

TEST_CASE("verify_graph on single graphs") {
  const GraphReport g8 = verify_graph(fx::g8());
  CHECK(g8.ok());
  CHECK(g8.chain_nodes == 1);
  CHECK(g8.leaves == 10);
  CHECK(g8.bits > kHeaderBits);
  CHECK_FALSE(verify_graph(fx::p7()).ok());
}

TEST_CASE("random sampling") {
  const BipartiteGraph a = random_p7free(12, 0.2, 42);
  CHECK(a == random_p7free(12, 0.2, 42));
  CHECK(is_p7_free(a));
  CHECK(a.order() == 12);
  CHECK(random_p7free(6, 0.5, 1).order() == 6);

  const BipartiteGraph full = random_p7free(12, 1.0, 3);
  CHECK(full.edge_count() == full.left().size() * full.right().size());
  CHECK(random_p7free(12, 0.0, 3).edge_count() == 0);

  CHECK(code_of([] { random_p7free(5, 1.5, 0); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { random_p7free(5, -0.1, 0); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { random_p7free(60, 0.06, 0, 5); }) == ErrorCode::RejectionBudgetExceeded);

  std::size_t distinct = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) distinct += random_p7free(10, 0.4, seed) != random_p7free(10, 0.4, seed + 1);
  CHECK(distinct >= 18);
}
