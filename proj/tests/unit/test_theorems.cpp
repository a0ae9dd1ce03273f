#include "doctest.h"

#include "../support/oracle.hpp"
#include "domgraph/errors.hpp"
#include "domgraph/theorems.hpp"

using namespace domgraph;

namespace {

bool brute_eulerian(const SeedGraph& g, int k) {
  return oracle::eulerian(oracle::reconfig({g.order(), g.edges()}, k));
}

std::vector<std::pair<std::string, int>> instances(const TheoremReport& r) {
  std::vector<std::pair<std::string, int>> out;
  for (const auto& i : r.eulerian_instances) out.emplace_back(i.seed, i.k);
  return out;
}

}  // namespace

TEST_CASE("expected verdicts") {
  CHECK(expected_eulerian(FamilySpec::path(4), 3));
  CHECK_FALSE(expected_eulerian(FamilySpec::path(5), 3));
  CHECK(expected_eulerian(FamilySpec::cycle(7), 4));
  CHECK(expected_eulerian(FamilySpec::cycle(3), 2));
  CHECK(expected_eulerian(FamilySpec::complete_bipartite(1, 6), 3));
  CHECK(expected_eulerian(FamilySpec::complete_bipartite(6, 1), 3));
  CHECK_FALSE(expected_eulerian(FamilySpec::complete_bipartite(1, 6), 4));
  CHECK(expected_eulerian(FamilySpec::complete_bipartite(3, 5), 3));
  CHECK_FALSE(expected_eulerian(FamilySpec::cocktail(8), 5));
  CHECK(expected_eulerian(FamilySpec::cocktail(8), 6));
  CHECK(expected_eulerian(FamilySpec::complete(5), 2));
  CHECK_FALSE(expected_eulerian(FamilySpec::complete(6), 2));
  CHECK(expected_eulerian(FamilySpec::corona(FamilySpec::path(4)), 5));
  CHECK_FALSE(expected_eulerian(FamilySpec::corona(FamilySpec::path(3)), 4));
  CHECK(expected_eulerian(FamilySpec::cocktail(6), 6));
  CHECK_FALSE(expected_eulerian(FamilySpec::path(4), 4));
  CHECK(expected_eulerian(FamilySpec::turan(6, 2), 3));

  CHECK_FALSE(try_expected_eulerian(FamilySpec::path(7), 2).has_value());
  try {
    expected_eulerian(FamilySpec::path(9), 3);
    FAIL("expected UncharacterizedInstance");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UncharacterizedInstance);
  }
}

TEST_CASE("expected verdicts match brute force where characterised") {
  std::vector<FamilySpec> specs;
  for (int n = 3; n <= 7; ++n) specs.push_back(FamilySpec::path(n)), specs.push_back(FamilySpec::cycle(n));
  for (int n = 2; n <= 6; ++n) specs.push_back(FamilySpec::complete(n));
  for (int m = 1; m <= 3; ++m)
    for (int n = m; n <= 4; ++n) specs.push_back(FamilySpec::complete_bipartite(m, n));
  specs.push_back(FamilySpec::cocktail(4));
  specs.push_back(FamilySpec::cocktail(6));
  specs.push_back(FamilySpec::corona(FamilySpec::path(2)));
  specs.push_back(FamilySpec::corona(FamilySpec::cycle(3)));
  for (const FamilySpec& spec : specs) {
    const SeedGraph g = make_family(spec);
    for (int k = 0; k <= g.order(); ++k)
      if (const auto expect = try_expected_eulerian(spec, k))
        CHECK_MESSAGE(*expect == brute_eulerian(g, k), spec.to_string(), " k=", k);
  }
}

TEST_CASE("dominating graph verdict from components") {
  CHECK(expected_dominating_graph_eulerian(SeedGraph(1)));
  CHECK(expected_dominating_graph_eulerian(disjoint_union({cocktail_party_graph(4), SeedGraph(1)})));
  CHECK_FALSE(expected_dominating_graph_eulerian(path_graph(3)));
}

TEST_CASE("claim names") {
  CHECK(all_claims().size() == 13);
  for (ClaimId c : all_claims()) CHECK(parse_claim(to_string(c)) == c);
  CHECK_THROWS_AS(parse_claim("nope"), Error);
  CHECK(default_max_n(ClaimId::path_cycle) == 15);
  CHECK(default_max_n(ClaimId::dominating_graph_characterization) == 7);
}

TEST_CASE("bounds are enforced") {
  VerifyOptions o;
  o.max_n = hard_max_n(ClaimId::parity_odd) + 1;
  try {
    verify_claim(ClaimId::parity_odd, o);
    FAIL("expected BoundExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BoundExceeded);
  }
}

TEST_CASE("parity claim on small graphs") {
  VerifyOptions o;
  o.max_n = 4;
  const TheoremReport r = verify_claim(ClaimId::parity_odd, o);
  CHECK(r.passed);
  CHECK(r.instances_checked == 1 + 2 + 8 + 64);
}

TEST_CASE("path and cycle sweep") {
  const TheoremReport r = verify_claim(ClaimId::path_cycle);
  CHECK(r.passed);
  const auto found = instances(r);
  CHECK(found.size() == 3);
  const std::vector<std::pair<std::string, int>> expect{{"cycle:3", 2}, {"path:4", 3}, {"cycle:7", 4}};
  for (const auto& e : expect) CHECK(std::find(found.begin(), found.end(), e) != found.end());
}

TEST_CASE("characterization sweep with audit") {
  VerifyOptions o;
  o.max_n = 5;
  o.audit = true;
  const TheoremReport r = verify_claim(ClaimId::dominating_graph_characterization, o);
  CHECK(r.passed);
  CHECK(r.instances_checked == 1 + 4 + 38 + 728);
  CHECK(r.eulerian_total == 3);
  CHECK(r.graphs_audited == r.instances_checked);
}

TEST_CASE("planted mutation is reported") {
  VerifyOptions o;
  o.max_n = 6;
  o.plant = PlantedMutation{cocktail_party_graph(6), 0, 2};
  const TheoremReport r = verify_claim(ClaimId::dominating_graph_characterization, o);
  CHECK_FALSE(r.passed);
  REQUIRE(r.counterexample_total == 1);
  CHECK(r.counterexamples[0].seed == "g6:" + to_graph6(cocktail_party_graph(6)));
}

TEST_CASE("results do not depend on the worker count") {
  VerifyOptions one, four;
  one.max_n = four.max_n = 6;
  four.jobs = 4;
  const TheoremReport a = verify_claim(ClaimId::mixed_parity_lemma, one);
  const TheoremReport b = verify_claim(ClaimId::mixed_parity_lemma, four);
  CHECK(a.instances_checked == b.instances_checked);
  CHECK(a.instances_skipped == b.instances_skipped);
  CHECK(a.passed == b.passed);
}

TEST_CASE("product decomposition examples") {
  const TheoremReport pp = verify_product_decomposition({path_graph(2), path_graph(2)});
  CHECK(pp.passed);
  const TheoremReport hh =
      verify_product_decomposition({cocktail_party_graph(4), cocktail_party_graph(4)});
  CHECK(hh.passed);
  CHECK(hh.eulerian_total == 1);
  const TheoremReport ph = verify_product_decomposition({path_graph(3), cocktail_party_graph(4)});
  CHECK(ph.passed);
  CHECK(ph.eulerian_total == 0);
  CHECK_THROWS_AS(verify_product_decomposition({path_graph(2)}), Error);

  // Union of two P_2 has 9 dominating sets by brute force.
  const SeedGraph u = disjoint_union({path_graph(2), path_graph(2)});
  CHECK(oracle::reconfig({u.order(), u.edges()}, 4).nodes.size() == 9);
}

TEST_CASE("mixed parity lemma") {
  const TheoremReport r = verify_mixed_parity_lemma(4);
  CHECK(r.passed);
  CHECK(r.instances_skipped > 0);
  // D(P_3) carries both parities.
  const auto d = oracle::reconfig({3, {{0, 1}, {1, 2}}}, 3).degrees();
  CHECK(std::any_of(d.begin(), d.end(), [](int x) { return x % 2 == 0; }));
  CHECK(std::any_of(d.begin(), d.end(), [](int x) { return x % 2 == 1; }));
}

TEST_CASE("structural audit") {
  CHECK_FALSE(audit_reconfig(build_reconfig(cocktail_party_graph(6), 6), true).has_value());
  CHECK_FALSE(audit_reconfig(build_reconfig(cycle_graph(7), 4), true).has_value());
  CHECK_THROWS_AS(audit_reconfig(cartesian_product(build_reconfig(path_graph(2), 2),
                                                   build_reconfig(path_graph(2), 2)),
                                 false),
                  Error);
}

TEST_CASE("claims pass at reduced bounds") {
  for (ClaimId c : {ClaimId::complete_bipartite, ClaimId::cocktail_k, ClaimId::complete_k,
                    ClaimId::universal_gamma_set, ClaimId::corona, ClaimId::gamma_formulas,
                    ClaimId::dominating_graph_connected_odd_bipartite,
                    ClaimId::product_decomposition}) {
    VerifyOptions o;
    o.max_n = std::min(default_max_n(c), 5);
    o.product_samples = 20;
    CHECK_MESSAGE(verify_claim(c, o).passed, to_string(c));
  }
}
