#include "doctest.h"

#include "domgraph/errors.hpp"
#include "domgraph/graph.hpp"

#include <set>

using namespace domgraph;

namespace {

std::set<std::pair<int, int>> edge_set(const SeedGraph& g) {
  const auto e = g.edges();
  return {e.begin(), e.end()};
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("families have the documented labelling") {
  const SeedGraph c3 = cycle_graph(3);
  for (int v = 0; v < 3; ++v) CHECK(c3.degree(v) == 2);

  const SeedGraph h4 = cocktail_party_graph(4);
  CHECK(edge_set(h4) == std::set<std::pair<int, int>>{{0, 2}, {0, 3}, {1, 2}, {1, 3}});
  for (int v = 0; v < 4; ++v) CHECK(h4.degree(v) == 2);
  // 0-2-1-3-0 is a 4-cycle.
  CHECK((h4.adjacent(0, 2) && h4.adjacent(2, 1) && h4.adjacent(1, 3) && h4.adjacent(3, 0)));

  const SeedGraph p2k1 = corona(path_graph(2));
  CHECK(edge_set(p2k1) == std::set<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 3}});

  const SeedGraph k23 = complete_bipartite_graph(2, 3);
  CHECK(k23.edge_count() == 6);
  CHECK_FALSE(k23.adjacent(0, 1));
  CHECK(k23.adjacent(1, 4));

  CHECK(make_family(FamilySpec::star(3)) == complete_bipartite_graph(1, 3));
  CHECK(turan_graph(6, 3) == cocktail_party_graph(6));
  CHECK(turan_graph(5, 5) == complete_graph(5));
  CHECK(turan_graph(7, 3).edge_count() == 16);
}

TEST_CASE("family specs round-trip through their string form") {
  const FamilySpec spec = FamilySpec::disjoint_union(
      {FamilySpec::corona(FamilySpec::path(3)), FamilySpec::complete_bipartite(2, 3)});
  CHECK(spec.to_string() == "union:corona:path:3+biclique:2,3");
  CHECK(family_order(spec) == 11);
  CHECK(make_family(spec).order() == 11);
  CHECK(make_family(spec).name() == spec.to_string());
}

TEST_CASE("family parameter validation") {
  CHECK(code_of([] { path_graph(0); }) == ErrorCode::InvalidFamilyParameters);
  CHECK(code_of([] { cycle_graph(2); }) == ErrorCode::InvalidFamilyParameters);
  CHECK(code_of([] { cocktail_party_graph(5); }) == ErrorCode::InvalidFamilyParameters);
  CHECK(code_of([] { turan_graph(4, 5); }) == ErrorCode::InvalidFamilyParameters);
  CHECK(code_of([] { path_graph(27); }) == ErrorCode::CapacityExceeded);
  CHECK(code_of([] { corona(path_graph(14)); }) == ErrorCode::CapacityExceeded);
}

TEST_CASE("edge mutation and adjacency validation") {
  SeedGraph g(3);
  g.add_edge(0, 2);
  CHECK(g.adjacent(2, 0));
  g.toggle_edge(0, 2);
  CHECK(g.edge_count() == 0);
  CHECK(code_of([&] { g.add_edge(1, 1); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([&] { g.add_edge(0, 3); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { SeedGraph::from_adjacency({0b10, 0b00}); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("cocktail party recognition") {
  CHECK(is_cocktail_party(cocktail_party_graph(6)));
  CHECK(is_cocktail_party(cycle_graph(4)));
  CHECK_FALSE(is_cocktail_party(complete_graph(4)));
  CHECK_FALSE(is_cocktail_party(path_graph(4)));
  CHECK_FALSE(is_cocktail_party(SeedGraph(1)));

  // C_4's complement: two edges, every vertex of degree one.
  const SeedGraph c4 = cycle_graph(4);
  int complement_edges = 0;
  for (int u = 0; u < 4; ++u) {
    int missing = 0;
    for (int v = 0; v < 4; ++v)
      if (u != v && !c4.adjacent(u, v)) ++missing;
    CHECK(missing == 1);
    complement_edges += missing;
  }
  CHECK(complement_edges / 2 == 2);
}

TEST_CASE("connected components") {
  CHECK(connected_components(path_graph(4)) == std::vector<Mask>{0b1111});
  CHECK(connected_components(disjoint_union({path_graph(2), cycle_graph(3)})) ==
        std::vector<Mask>{0b00011, 0b11100});
  CHECK(connected_components(SeedGraph(3)) == std::vector<Mask>{0b001, 0b010, 0b100});
  CHECK(is_connected(SeedGraph(1)));
  CHECK_FALSE(is_connected(SeedGraph(2)));
  CHECK(is_bipartite(cycle_graph(6)));
  CHECK_FALSE(is_bipartite(cycle_graph(5)));
  CHECK(induced_subgraph(cycle_graph(5), 0b00111) == path_graph(3));
}

TEST_CASE("labelled graph enumeration") {
  CHECK(labeled_graph_count(2) == 2);
  CHECK(labeled_graph_count(3) == 8);
  CHECK(enumerate_labeled_graphs(2, false).size() == 2);
  CHECK(enumerate_labeled_graphs(3, false).size() == 8);

  // Connected count by a union-find filter independent of the enumerator.
  std::size_t connected = 0;
  for (std::uint64_t mask = 0; mask < 64; ++mask) {
    int parent[4] = {0, 1, 2, 3};
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x];
      return x;
    };
    int parts = 4, slot = 0;
    for (int v = 1; v < 4; ++v)
      for (int u = 0; u < v; ++u, ++slot)
        if ((mask >> slot) & 1) {
          const int a = find(u), b = find(v);
          if (a != b) parent[a] = b, --parts;
        }
    if (parts == 1) ++connected;
  }
  CHECK(connected == 38);
  CHECK(enumerate_labeled_graphs(4, true).size() == 38);

  const std::vector<std::size_t> connected_counts{1, 1, 4, 38, 728, 26704};
  for (int n = 1; n <= 6; ++n)
    CHECK(enumerate_labeled_graphs(n, true).size() == connected_counts[n - 1]);

  for (std::uint64_t mask = 0; mask < labeled_graph_count(5); mask += 37)
    CHECK(edge_mask_of(labeled_graph(5, mask)) == mask);

  CHECK(code_of([] { labeled_graph_count(8); }) == ErrorCode::BoundExceeded);
  CHECK(code_of([] { labeled_graph_count(0); }) == ErrorCode::BoundExceeded);
}

TEST_CASE("graph6 decoding") {
  const SeedGraph p2 = parse_graph6("A_");
  CHECK(p2 == path_graph(2));
  CHECK(parse_graph6("?").order() == 0);
  CHECK(parse_graph6(">>graph6<<A_\n") == path_graph(2));
  // C_4 labelled 0-1-2-3: slots (0,1),(1,2),(2,3),(0,3) = bits 0,2,5,3 -> 101101.
  CHECK(parse_graph6("Cl") == cycle_graph(4));

  CHECK(code_of([] { parse_graph6("D"); }) == ErrorCode::MalformedGraph6);
  CHECK(code_of([] { parse_graph6(""); }) == ErrorCode::MalformedGraph6);
  CHECK(code_of([] { parse_graph6("A_?"); }) == ErrorCode::MalformedGraph6);
  CHECK(code_of([] { parse_graph6("A`"); }) == ErrorCode::MalformedGraph6);
  CHECK(code_of([] { parse_graph6("A "); }) == ErrorCode::MalformedGraph6);
  CHECK(code_of([] { parse_graph6("~?@c"); }) == ErrorCode::CapacityExceeded);
}

TEST_CASE("graph6 round-trips every labelled graph on five vertices") {
  for_each_labeled_graph(5, false, [](const SeedGraph& g, std::uint64_t) {
    REQUIRE(parse_graph6(to_graph6(g)) == g);
  });
  const SeedGraph big = corona(cycle_graph(13));
  CHECK(parse_graph6(to_graph6(big)) == big);
}

TEST_CASE("dot output lists each edge once") {
  const std::string dot = to_dot(path_graph(3));
  CHECK(dot.find("0 -- 1") != std::string::npos);
  CHECK(dot.find("1 -- 2") != std::string::npos);
  CHECK(dot.find("1 -- 0") == std::string::npos);
}
