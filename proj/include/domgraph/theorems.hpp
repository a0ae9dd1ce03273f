#pragma once

#include "domgraph/graph.hpp"
#include "domgraph/reconfig.hpp"

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace domgraph {

// ------------------------------------------------------ expected verdicts

/**
 * Closed-form Eulerian verdict for D_k of a characterised family instance.
 *
 * k = |V| is decided for every seed: D(G) is Eulerian iff each component of G
 * is a single vertex or a cocktail party graph. Below |V| the characterised
 * ranges are gamma < k < |V| for paths, cycles, complete graphs, complete
 * bipartite graphs (and stars, and Turan graphs that coincide with one of
 * these), cocktail party graphs, coronas, and connected explicit seeds in
 * which every gamma-subset dominates. Anything else throws
 * UncharacterizedInstance.
 */
bool expected_eulerian(const FamilySpec& spec, int k);
std::optional<bool> try_expected_eulerian(const FamilySpec& spec, int k);

// Verdict for k = |V| from the component structure alone.
bool expected_dominating_graph_eulerian(const SeedGraph& g);

// ------------------------------------------------------------- claims

enum class ClaimId {
  parity_odd,
  product_decomposition,
  mixed_parity_lemma,
  dominating_graph_characterization,
  path_cycle,
  complete_bipartite,
  cocktail_k,
  complete_k,
  universal_gamma_set,
  corona,
  bipartite_well_dominated,
  gamma_formulas,
  dominating_graph_connected_odd_bipartite,
};

const std::vector<ClaimId>& all_claims();
std::string_view to_string(ClaimId claim);
ClaimId parse_claim(std::string_view name);  // throws ClaimUnknown

struct Instance {
  std::string seed;  // GraphSpecString, e.g. "cycle:7" or "g6:Ch"
  int k = 0;
};

struct Counterexample {
  std::string seed;
  std::optional<int> k;
  std::string expected;
  std::string computed;
};

inline constexpr std::size_t kCounterexampleCap = 32;
inline constexpr std::size_t kEulerianInstanceCap = 256;

struct TheoremReport {
  ClaimId claim = ClaimId::parity_odd;
  std::string bounds;
  std::uint64_t instances_checked = 0;
  std::uint64_t instances_skipped = 0;  // outside the claim's hypothesis
  bool passed = true;
  std::vector<Counterexample> counterexamples;  // first kCounterexampleCap by instance order
  std::uint64_t counterexample_total = 0;
  std::vector<Instance> eulerian_instances;  // computed-Eulerian instances, capped
  std::uint64_t eulerian_total = 0;
  std::uint64_t graphs_audited = 0;
  std::uint64_t pairwise_audited = 0;
  std::chrono::duration<double> elapsed{};
};

// Flips one seed edge before D(G) is built, leaving the expected verdict
// untouched. Used to prove the harness reports planted counterexamples.
struct PlantedMutation {
  SeedGraph target;
  int u = 0;
  int v = 0;
};

struct VerifyOptions {
  std::optional<int> max_n;  // overrides the claim's default upper bound
  int jobs = 1;
  bool audit = false;      // run the structural audit on every D_k built
  int pairwise_max_n = 10; // audit also runs the all-pairs oracle up to this order
  std::size_t product_samples = 100;
  std::uint64_t product_seed = 2024;
  std::optional<PlantedMutation> plant;  // dominating_graph_characterization only
};

// Default and maximum upper bound on n per claim.
int default_max_n(ClaimId claim);
int hard_max_n(ClaimId claim);

TheoremReport verify_claim(ClaimId claim, const VerifyOptions& options = {});

TheoremReport verify_product_decomposition(const std::vector<SeedGraph>& parts,
                                           const VerifyOptions& options = {});
TheoremReport verify_mixed_parity_lemma(int n_max, const VerifyOptions& options = {});

/**
 * Structural invariants of a seed-built D_k: proper parity 2-colouring,
 * node_degree agreeing with the materialised degree, and for k = |V|
 * connectivity, odd order and an even-degree node. With `pairwise` the node
 * set is rebuilt by filtering all subsets and the edge set by testing every
 * node pair for a one-element symmetric difference. Returns the first
 * violation found.
 */
std::optional<std::string> audit_reconfig(const ReconfigGraph& r, bool pairwise);

}  // namespace domgraph
