#include "doctest.h"

#include "../support/oracle.hpp"
#include "domgraph/domination.hpp"
#include "domgraph/errors.hpp"

using namespace domgraph;

namespace {

oracle::Graph plain(const SeedGraph& g) { return {g.order(), g.edges()}; }

VertexSet set_of(std::initializer_list<int> vs, int n) {
  Mask m = 0;
  for (int v : vs) m |= bit(v);
  return {m, n};
}

}  // namespace

TEST_CASE("vertex sets") {
  const VertexSet s = set_of({0, 2}, 4);
  CHECK(s.size() == 2);
  CHECK(s.to_string() == "{0,2}");
  CHECK(s.to_bitstring() == "1010");
  CHECK(s.with(3).members() == std::vector<int>{0, 2, 3});
  CHECK(s.without(0) == set_of({2}, 4));
  CHECK(VertexSet::all(3).bits() == 0b111);
  CHECK_THROWS_AS(VertexSet(0b100, 2), Error);
  CHECK(reconfig_order(set_of({3}, 4), set_of({0, 1}, 4)));
  CHECK(reconfig_order(set_of({0, 2}, 4), set_of({1, 2}, 4)));
}

TEST_CASE("domination predicates") {
  const SeedGraph p4 = path_graph(4);
  CHECK(is_dominating(p4, set_of({1, 2}, 4)));
  CHECK_FALSE(is_dominating(p4, VertexSet::empty(4)));
  CHECK_FALSE(is_dominating(SeedGraph(1), VertexSet::empty(1)));
  CHECK(is_dominating(SeedGraph(0), VertexSet::empty(0)));

  const SeedGraph star = complete_bipartite_graph(1, 3);
  CHECK(is_dominating(star, set_of({1, 2, 3}, 4)));
  CHECK(is_minimal_dominating(star, set_of({1, 2, 3}, 4)));
  CHECK_FALSE(is_minimal_dominating(p4, VertexSet::all(4)));

  const SeedGraph c7 = cycle_graph(7);
  const VertexSet s = set_of({0, 3, 5}, 7);
  CHECK(is_minimal_dominating(c7, s));
  const oracle::Graph oc7 = plain(c7);
  CHECK(oracle::dominates(oc7, {0, 3, 5}));
  CHECK_FALSE(oracle::dominates(oc7, {3, 5}));
  CHECK_FALSE(oracle::dominates(oc7, {0, 5}));
  CHECK_FALSE(oracle::dominates(oc7, {0, 3}));

  try {
    is_dominating(p4, VertexSet::empty(5));
    FAIL("expected DimensionMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DimensionMismatch);
  }
}

TEST_CASE("domination table agrees with the naive test on all small graphs") {
  for (int n = 1; n <= 5; ++n)
    for_each_labeled_graph(n, false, [n](const SeedGraph& g, std::uint64_t) {
      const DominationTable table(g);
      const oracle::Graph og = plain(g);
      for (Mask m = 0; m < (Mask{1} << n); ++m) {
        const bool expect = oracle::dominates(og, oracle::members(m, n));
        REQUIRE(table.dominates(m) == expect);
        REQUIRE(is_dominating(g, {m, n}) == expect);
      }
    });
}

TEST_CASE("dominating set enumeration") {
  const SeedGraph p4 = path_graph(4);
  CHECK(enumerate_dominating_sets(p4, 4).size() == 9);
  CHECK(enumerate_dominating_sets(p4, 3).size() == 8);
  CHECK(enumerate_dominating_sets(complete_graph(6), 1).size() == 6);

  const auto sets = enumerate_dominating_sets(cycle_graph(6), 6);
  CHECK(std::is_sorted(sets.begin(), sets.end(), reconfig_order));
  const oracle::Reconfig brute = oracle::reconfig(plain(cycle_graph(6)), 6);
  CHECK(sets.size() == brute.nodes.size());
}

TEST_CASE("domination profiles") {
  const auto p7 = domination_profile(path_graph(7));
  CHECK(p7.gamma == 3);

  const auto h6 = domination_profile(cocktail_party_graph(6));
  CHECK(h6.gamma == 2);
  CHECK(h6.universal_threshold == 2);

  const auto cor = domination_profile(corona(path_graph(3)));
  CHECK(cor.gamma == 3);
  CHECK(cor.upper_gamma == 3);
  CHECK(cor.well_dominated);

  const auto p4 = domination_profile(path_graph(4));
  CHECK(p4.counts_by_size == std::vector<std::uint64_t>{0, 0, 4, 4, 1});
  CHECK(p4.total_count == 9);
  CHECK(p4.well_dominated);
  CHECK_FALSE(domination_profile(path_graph(5)).well_dominated);

  CHECK_THROWS_AS(domination_profile(SeedGraph(0)), Error);
}

TEST_CASE("gamma of paths and cycles is ceil(n/3)") {
  for (int n = 3; n <= 14; ++n) {
    CHECK(domination_profile(path_graph(n)).gamma == (n + 2) / 3);
    CHECK(domination_profile(cycle_graph(n)).gamma == (n + 2) / 3);
  }
}

TEST_CASE("the number of dominating sets is odd") {
  for (int n = 1; n <= 5; ++n)
    for_each_labeled_graph(n, false, [](const SeedGraph& g, std::uint64_t) {
      REQUIRE(domination_profile(g).total_count % 2 == 1);
    });
}

TEST_CASE("binomial") {
  CHECK(binomial(6, 2) == 15);
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(3, 4) == 0);
}
