#include "domgraph/domination.hpp"
#include "domgraph/errors.hpp"
#include "domgraph/theorems.hpp"

#include <algorithm>

namespace domgraph {

namespace {

[[noreturn]] void uncharacterized(const FamilySpec& spec, int k) {
  throw Error(ErrorCode::UncharacterizedInstance,
              spec.to_string() + " with k = " + std::to_string(k));
}

int ceil_third(int n) { return (n + 2) / 3; }

bool biclique_verdict(const FamilySpec& spec, int m, int n, int k) {
  if (m > n) std::swap(m, n);
  const int gamma = m == 1 ? 1 : 2;
  if (!(gamma < k && k < m + n)) uncharacterized(spec, k);
  if (m == 1) return n % 2 == 0 && k % 2 == 1;
  return m >= 3 && (n - m) % 2 == 0 && k == 3;
}

bool complete_verdict(const FamilySpec& spec, int n, int k) {
  if (!(n >= 2 && 1 < k && k < n)) uncharacterized(spec, k);
  return n % 2 == 1 && k == 2;
}

bool cocktail_verdict(const FamilySpec& spec, int n, int k) {
  if (!(2 < k && k < n)) uncharacterized(spec, k);
  return k % 2 == 0;
}

}  // namespace

bool expected_dominating_graph_eulerian(const SeedGraph& g) {
  for (Mask component : connected_components(g)) {
    const SeedGraph part = induced_subgraph(g, component);
    if (part.order() > 1 && !is_cocktail_party(part)) return false;
  }
  return true;
}

bool expected_eulerian(const FamilySpec& spec, int k) {
  const int order = family_order(spec);
  if (k == order) return expected_dominating_graph_eulerian(make_family(spec));

  switch (spec.kind) {
    case FamilyKind::path: {
      const int n = spec.params[0];
      if (!(n >= 3 && ceil_third(n) < k && k < n)) uncharacterized(spec, k);
      return n == 4 && k == 3;
    }
    case FamilyKind::cycle: {
      const int n = spec.params[0];
      if (!(n >= 3 && ceil_third(n) < k && k < n)) uncharacterized(spec, k);
      return (n == 7 && k == 4) || (n == 3 && k == 2);
    }
    case FamilyKind::complete:
      return complete_verdict(spec, spec.params[0], k);
    case FamilyKind::complete_bipartite:
      return biclique_verdict(spec, spec.params[0], spec.params[1], k);
    case FamilyKind::star:
      return biclique_verdict(spec, 1, spec.params[0], k);
    case FamilyKind::cocktail:
      return cocktail_verdict(spec, spec.params[0], k);
    case FamilyKind::turan: {
      const int n = spec.params[0], r = spec.params[1];
      if (r == n) return complete_verdict(spec, n, k);
      if (2 * r == n && n >= 4) return cocktail_verdict(spec, n, k);
      if (r == 2) return biclique_verdict(spec, n / 2, n - n / 2, k);
      uncharacterized(spec, k);
    }
    case FamilyKind::corona: {
      const int n = family_order(spec.parts.at(0));
      if (!(n >= 2 && n < k && k < 2 * n)) uncharacterized(spec, k);
      return n % 2 == 0 && k == n + 1;
    }
    case FamilyKind::explicit_graph: {
      // Connected seeds where every gamma-subset dominates are complete or
      // cocktail party graphs.
      const SeedGraph& g = *spec.graph;
      const int n = g.order();
      if (n < 2 || !is_connected(g)) uncharacterized(spec, k);
      const DominationProfile p = domination_profile(g);
      if (p.counts_by_size[p.gamma] != binomial(n, p.gamma)) uncharacterized(spec, k);
      if (!(p.gamma < k && k < n)) uncharacterized(spec, k);
      if (is_complete(g)) return n % 2 == 1 && k == 2;
      if (is_cocktail_party(g)) return k % 2 == 0;
      uncharacterized(spec, k);
    }
    case FamilyKind::disjoint_union:
      break;
  }
  uncharacterized(spec, k);
}

std::optional<bool> try_expected_eulerian(const FamilySpec& spec, int k) {
  try {
    return expected_eulerian(spec, k);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::UncharacterizedInstance) return std::nullopt;
    throw;
  }
}

}  // namespace domgraph
