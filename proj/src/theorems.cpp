#include "domgraph/theorems.hpp"

#include "domgraph/domination.hpp"
#include "domgraph/errors.hpp"

#include <algorithm>
#include <bit>
#include <exception>
#include <functional>
#include <random>
#include <thread>
#include <utility>

namespace domgraph {

// ------------------------------------------------------------- claim ids

namespace {

struct ClaimInfo {
  ClaimId id;
  std::string_view name;
  int default_max_n;
  int hard_max_n;
};

constexpr ClaimInfo kClaims[] = {
    {ClaimId::parity_odd, "parity_odd", 6, 7},
    {ClaimId::product_decomposition, "product_decomposition", 5, 6},
    {ClaimId::mixed_parity_lemma, "mixed_parity_lemma", 6, 7},
    {ClaimId::dominating_graph_characterization, "dominating_graph_characterization", 7, 7},
    {ClaimId::path_cycle, "path_cycle", 15, 20},
    {ClaimId::complete_bipartite, "complete_bipartite", 8, 11},
    {ClaimId::cocktail_k, "cocktail_k", 12, 20},
    {ClaimId::complete_k, "complete_k", 12, 20},
    {ClaimId::universal_gamma_set, "universal_gamma_set", 7, 7},
    {ClaimId::corona, "corona", 5, 6},
    {ClaimId::bipartite_well_dominated, "bipartite_well_dominated", 5, 6},
    {ClaimId::gamma_formulas, "gamma_formulas", 18, 22},
    {ClaimId::dominating_graph_connected_odd_bipartite, "dominating_graph_connected_odd_bipartite", 6, 7},
};

const ClaimInfo& info(ClaimId claim) {
  for (const auto& c : kClaims)
    if (c.id == claim) return c;
  throw Error(ErrorCode::ClaimUnknown, "unregistered claim");
}

}  // namespace

const std::vector<ClaimId>& all_claims() {
  static const std::vector<ClaimId> claims = [] {
    std::vector<ClaimId> out;
    for (const auto& c : kClaims) out.push_back(c.id);
    return out;
  }();
  return claims;
}

std::string_view to_string(ClaimId claim) { return info(claim).name; }

ClaimId parse_claim(std::string_view name) {
  for (const auto& c : kClaims)
    if (c.name == name) return c.id;
  throw Error(ErrorCode::ClaimUnknown, "no claim named '" + std::string(name) + "'");
}

int default_max_n(ClaimId claim) { return info(claim).default_max_n; }
int hard_max_n(ClaimId claim) { return info(claim).hard_max_n; }

// ------------------------------------------------------------- audit

std::optional<std::string> audit_reconfig(const ReconfigGraph& r, bool pairwise) {
  const SeedGraph& g = r.seed();
  const int n = g.order();
  const int k = r.k();
  const auto nodes = r.nodes();

  if (!parity_bipartition_valid(r)) return "parity 2-colouring is not proper";
  for (std::size_t i = 0; i < nodes.size(); ++i)
    if (static_cast<std::size_t>(node_degree(g, nodes[i], k)) != r.degree(i))
      return "node_degree disagrees with materialised degree at " + nodes[i].to_string();

  if (k == n) {
    const EulerReport rep = eulerian_report(r);
    if (!rep.is_connected) return "D(G) is disconnected";
    if (rep.node_count % 2 == 0) return "D(G) has even order";
    bool even = false;
    for (std::size_t i = 0; i < r.node_count() && !even; ++i) even = r.degree(i) % 2 == 0;
    if (!even) return "D(G) has no even-degree node";
  }

  if (pairwise) {
    std::vector<VertexSet> expected;
    const std::uint64_t limit = std::uint64_t{1} << n;
    for (std::uint64_t m = 0; m < limit; ++m) {
      const VertexSet s(static_cast<Mask>(m), n);
      if (s.size() <= k && is_dominating(g, s)) expected.push_back(s);
    }
    std::sort(expected.begin(), expected.end(), reconfig_order);
    if (!std::equal(expected.begin(), expected.end(), nodes.begin(), nodes.end()))
      return "node set differs from the brute-force subset filter";

    std::size_t pairs = 0;
    for (std::size_t i = 0; i < nodes.size(); ++i)
      for (std::size_t j = i + 1; j < nodes.size(); ++j)
        if (std::has_single_bit(nodes[i].bits() ^ nodes[j].bits())) {
          ++pairs;
          if (!r.adjacent(i, j))
            return "missing edge " + nodes[i].to_string() + " -- " + nodes[j].to_string();
        }
    if (pairs != r.edge_count()) return "edge set has pairs that are not one-element moves";
  }
  return std::nullopt;
}

// --------------------------------------------------------- aggregation

namespace {

// (instance ordinal, k): counterexamples are reported in this order whatever
// the worker count.
using Key = std::pair<std::uint64_t, int>;

std::string verdict(bool eulerian) { return eulerian ? "eulerian" : "not eulerian"; }

std::string seed_string(const SeedGraph& g) { return "g6:" + to_graph6(g); }

struct Partial {
  std::uint64_t checked = 0;
  std::uint64_t skipped = 0;
  std::uint64_t audited = 0;
  std::uint64_t pairwise = 0;
  std::uint64_t bad_total = 0;
  std::uint64_t euler_total = 0;
  std::vector<std::pair<Key, Counterexample>> bad;
  std::vector<std::pair<Key, Instance>> euler;

  // Keys arrive in increasing order within one worker, so keeping the first
  // entries keeps the globally smallest ones.
  void fail(Key key, Counterexample c) {
    ++bad_total;
    if (bad.size() < kCounterexampleCap) bad.emplace_back(key, std::move(c));
  }

  void eulerian(Key key, Instance i) {
    ++euler_total;
    if (euler.size() < kEulerianInstanceCap) euler.emplace_back(key, std::move(i));
  }

  void merge(Partial&& other) {
    checked += other.checked;
    skipped += other.skipped;
    audited += other.audited;
    pairwise += other.pairwise;
    bad_total += other.bad_total;
    euler_total += other.euler_total;
    std::move(other.bad.begin(), other.bad.end(), std::back_inserter(bad));
    std::move(other.euler.begin(), other.euler.end(), std::back_inserter(euler));
  }
};

template <class Fn>
Partial run_parallel(std::uint64_t count, int jobs, Fn&& fn) {
  jobs = std::clamp(jobs, 1, 256);
  if (jobs == 1 || count < 2) {
    Partial acc;
    for (std::uint64_t i = 0; i < count; ++i) fn(i, acc);
    return acc;
  }
  std::vector<Partial> parts(static_cast<std::size_t>(jobs));
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(jobs));
  std::vector<std::thread> workers;
  for (int w = 0; w < jobs; ++w) {
    const std::uint64_t begin = count * static_cast<std::uint64_t>(w) / static_cast<std::uint64_t>(jobs);
    const std::uint64_t end = count * static_cast<std::uint64_t>(w + 1) / static_cast<std::uint64_t>(jobs);
    workers.emplace_back([&, w, begin, end] {
      try {
        for (std::uint64_t i = begin; i < end; ++i) fn(i, parts[w]);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : workers) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  Partial acc;
  for (auto& p : parts) acc.merge(std::move(p));
  return acc;
}

TheoremReport finalize(ClaimId claim, std::string bounds, Partial&& acc) {
  TheoremReport report;
  report.claim = claim;
  report.bounds = std::move(bounds);
  report.instances_checked = acc.checked;
  report.instances_skipped = acc.skipped;
  report.graphs_audited = acc.audited;
  report.pairwise_audited = acc.pairwise;
  report.counterexample_total = acc.bad_total;
  report.eulerian_total = acc.euler_total;
  const auto by_key = [](const auto& a, const auto& b) { return a.first < b.first; };
  std::stable_sort(acc.bad.begin(), acc.bad.end(), by_key);
  std::stable_sort(acc.euler.begin(), acc.euler.end(), by_key);
  for (std::size_t i = 0; i < acc.bad.size() && i < kCounterexampleCap; ++i)
    report.counterexamples.push_back(std::move(acc.bad[i].second));
  for (std::size_t i = 0; i < acc.euler.size() && i < kEulerianInstanceCap; ++i)
    report.eulerian_instances.push_back(std::move(acc.euler[i].second));
  report.passed = report.counterexamples.empty();
  return report;
}

void audit_into(const ReconfigGraph& r, const std::string& seed, const VerifyOptions& o,
                Partial& acc, Key key) {
  if (!o.audit) return;
  const bool pairwise = r.seed().order() <= o.pairwise_max_n;
  ++acc.audited;
  if (pairwise) ++acc.pairwise;
  if (auto why = audit_reconfig(r, pairwise))
    acc.fail(key, {seed, r.k(), "structural invariants hold", *why});
}

std::string range(int lo, int hi) {
  return "[" + std::to_string(lo) + "," + std::to_string(hi) + "]";
}

// Visits labelled graphs on lo..hi vertices; ordinal = (n, edge mask).
template <class Fn>
void sweep_labeled(int lo, int hi, bool connected_only, const VerifyOptions& o, Partial& acc,
                   Fn&& fn) {
  for (int n = lo; n <= hi; ++n) {
    acc.merge(run_parallel(labeled_graph_count(n), o.jobs, [&](std::uint64_t mask, Partial& p) {
      const SeedGraph g = labeled_graph(n, mask);
      if (connected_only && !is_connected(g)) return;
      fn(g, (static_cast<std::uint64_t>(n) << 40) | mask, p);
    }));
  }
}

struct FamilyCase {
  FamilySpec spec;
  int k;
};

using Hypothesis = std::function<std::optional<std::string>(const SeedGraph&)>;

void check_family_cases(const std::vector<FamilyCase>& cases, const VerifyOptions& o,
                        Partial& acc, const std::function<bool(const FamilyCase&)>& expected,
                        const Hypothesis& hypothesis = {}) {
  acc.merge(run_parallel(cases.size(), o.jobs, [&](std::uint64_t i, Partial& p) {
    const FamilyCase& c = cases[i];
    const SeedGraph g = make_family(c.spec);
    const std::string name = c.spec.to_string();
    const Key key{i, c.k};
    ++p.checked;
    if (hypothesis)
      if (auto why = hypothesis(g)) p.fail(key, {name, c.k, "seed satisfies the hypothesis", *why});
    const ReconfigGraph r = build_reconfig(g, c.k);
    const bool computed = eulerian_report(r).is_eulerian;
    const bool want = expected(c);
    if (computed) p.eulerian(key, {name, c.k});
    if (computed != want) p.fail(key, {name, c.k, verdict(want), verdict(computed)});
    audit_into(r, name, o, p, key);
  }));
}

bool expected_from_closed_form(const FamilyCase& c) { return expected_eulerian(c.spec, c.k); }

int gamma_of(const FamilySpec& spec) { return domination_profile(make_family(spec)).gamma; }

// Every k with gamma < k < |V|.
void add_restricted_range(std::vector<FamilyCase>& cases, const FamilySpec& spec) {
  const int n = family_order(spec);
  for (int k = gamma_of(spec) + 1; k < n; ++k) cases.push_back({spec, k});
}

// ------------------------------------------------------- product check

struct ProductOutcome {
  std::optional<std::string> failure;
  bool union_eulerian = false;
  bool factors_eulerian = false;
};

ProductOutcome check_product(const std::vector<SeedGraph>& parts, const VerifyOptions& o,
                             Partial& acc, Key key, const std::string& name) {
  ProductOutcome out;
  const SeedGraph whole = disjoint_union(parts);
  const ReconfigGraph united = build_reconfig(whole, whole.order());
  audit_into(united, name, o, acc, key);

  std::vector<ReconfigGraph> factors;
  for (const auto& part : parts) {
    factors.push_back(build_reconfig(part, part.order()));
    audit_into(factors.back(), seed_string(part), o, acc, key);
  }
  ReconfigGraph product = factors.front();
  for (std::size_t f = 1; f < factors.size(); ++f) product = cartesian_product(product, factors[f]);

  if (united.node_count() != product.node_count()) {
    out.failure = "node counts differ: " + std::to_string(united.node_count()) + " vs " +
                  std::to_string(product.node_count());
    return out;
  }

  // Restriction map: a dominating set of the union goes to the tuple of its
  // restrictions to each part.
  std::vector<std::size_t> image(united.node_count());
  std::vector<std::size_t> preimage(product.node_count(), united.node_count());
  std::vector<std::uint32_t> tuple(parts.size());
  for (std::size_t i = 0; i < united.node_count(); ++i) {
    const Mask bits = united.node_set(i).bits();
    int offset = 0;
    std::size_t index = 0;
    for (std::size_t f = 0; f < parts.size(); ++f) {
      const int n = parts[f].order();
      const VertexSet restricted((bits >> offset) & full_mask(n), n);
      const auto pos = factors[f].index_of(restricted);
      if (!pos) {
        out.failure = "restriction of " + united.node_set(i).to_string() + " is not dominating";
        return out;
      }
      tuple[f] = static_cast<std::uint32_t>(*pos);
      index = index * factors[f].node_count() + *pos;
      offset += n;
    }
    const auto label = product.tuple_label(index);
    if (!std::equal(label.begin(), label.end(), tuple.begin(), tuple.end())) {
      out.failure = "product node order does not follow the factor tuples";
      return out;
    }
    if (preimage[index] != united.node_count()) {
      out.failure = "restriction map is not injective";
      return out;
    }
    image[i] = index;
    preimage[index] = i;
  }

  for (std::size_t i = 0; i < united.node_count(); ++i)
    for (std::uint32_t j : united.neighbors(i))
      if (!product.adjacent(image[i], image[j])) {
        out.failure = "edge " + united.node_label(i) + " -- " + united.node_label(j) +
                      " is not an edge of the product";
        return out;
      }
  for (std::size_t u = 0; u < product.node_count(); ++u)
    for (std::uint32_t v : product.neighbors(u))
      if (!united.adjacent(preimage[u], preimage[v])) {
        out.failure = "product edge " + product.node_label(u) + " -- " + product.node_label(v) +
                      " is not an edge of D(union)";
        return out;
      }

  out.union_eulerian = eulerian_report(united).is_eulerian;
  out.factors_eulerian = true;
  for (const auto& f : factors) out.factors_eulerian &= eulerian_report(f).is_eulerian;
  return out;
}

void record_product(const std::vector<SeedGraph>& parts, const VerifyOptions& o, Partial& acc,
                    Key key) {
  std::string name = "union:";
  for (std::size_t f = 0; f < parts.size(); ++f) name += (f ? "+" : "") + seed_string(parts[f]);
  const int order = disjoint_union(parts).order();
  ++acc.checked;
  const ProductOutcome out = check_product(parts, o, acc, key, name);
  if (out.failure) {
    acc.fail(key, {name, order, "restriction map is an isomorphism", *out.failure});
    return;
  }
  if (out.union_eulerian) acc.eulerian(key, {name, order});
  if (out.union_eulerian != out.factors_eulerian)
    acc.fail(key, {name, order, "union " + verdict(out.factors_eulerian) + " (all factors)",
                   "union " + verdict(out.union_eulerian)});
}

SeedGraph random_connected_graph(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> pick(0, labeled_graph_count(n) - 1);
  for (;;) {
    SeedGraph g = labeled_graph(n, pick(rng));
    if (is_connected(g)) return g;
  }
}

// ------------------------------------------------------------ claims

void run_parity_odd(int hi, const VerifyOptions& o, Partial& acc) {
  sweep_labeled(1, hi, false, o, acc, [&](const SeedGraph& g, std::uint64_t id, Partial& p) {
    ++p.checked;
    const DominationProfile profile = domination_profile(g);
    if (profile.total_count % 2 == 0)
      p.fail({id, g.order()}, {seed_string(g), std::nullopt, "odd dominating-set count",
                               "count " + std::to_string(profile.total_count)});
    if (o.audit) audit_into(build_reconfig(g, g.order()), seed_string(g), o, p, {id, g.order()});
  });
}

void run_characterization(int hi, const VerifyOptions& o, Partial& acc) {
  // Single-vertex seeds sit outside the sweep; D(K_1) is one node, no edges.
  {
    const ReconfigGraph trivial = build_reconfig(path_graph(1), 1);
    if (trivial.node_count() != 1 || trivial.edge_count() != 0)
      acc.fail({0, 1}, {"path:1", 1, "1 node, 0 edges",
                        std::to_string(trivial.node_count()) + " nodes, " +
                            std::to_string(trivial.edge_count()) + " edges"});
  }
  sweep_labeled(2, hi, true, o, acc, [&](const SeedGraph& g, std::uint64_t id, Partial& p) {
    const int n = g.order();
    const bool want = is_cocktail_party(g);
    SeedGraph built = g;
    if (o.plant && g == o.plant->target) built.toggle_edge(o.plant->u, o.plant->v);
    const ReconfigGraph r = build_reconfig(built, n);
    const bool computed = eulerian_report(r).is_eulerian;
    const std::string name = seed_string(g);
    ++p.checked;
    if (computed) p.eulerian({id, n}, {name, n});
    if (computed != want) p.fail({id, n}, {name, n, verdict(want), verdict(computed)});
    audit_into(r, name, o, p, {id, n});
  });
}

void run_mixed_parity(int hi, const VerifyOptions& o, Partial& acc) {
  sweep_labeled(2, hi, true, o, acc, [&](const SeedGraph& g, std::uint64_t id, Partial& p) {
    const int n = g.order();
    const DominationProfile profile = domination_profile(g);
    const int l = profile.universal_threshold - 1;
    const bool hypothesis = l >= 1 && profile.counts_by_size[l] > 0 &&
                            profile.counts_by_size[l] < binomial(n, l);
    if (!hypothesis) {
      ++p.skipped;
      return;
    }
    ++p.checked;
    const ReconfigGraph r = build_reconfig(g, n);
    bool even = false, odd = false;
    for (std::size_t i = 0; i < r.node_count(); ++i) (r.degree(i) % 2 ? odd : even) = true;
    if (!(even && odd))
      p.fail({id, n}, {seed_string(g), n, "even and odd degrees",
                       even ? "only even degrees" : "only odd degrees"});
    audit_into(r, seed_string(g), o, p, {id, n});
  });
}

void run_universal_gamma(int hi, const VerifyOptions& o, Partial& acc) {
  sweep_labeled(2, hi, true, o, acc, [&](const SeedGraph& g, std::uint64_t id, Partial& p) {
    const int n = g.order();
    const DominationProfile profile = domination_profile(g);
    if (profile.counts_by_size[profile.gamma] != binomial(n, profile.gamma)) {
      ++p.skipped;
      return;
    }
    const std::string name = seed_string(g);
    const bool complete = is_complete(g);
    const bool cocktail = is_cocktail_party(g);
    ++p.checked;
    if (!complete && !cocktail)
      p.fail({id, 0}, {name, std::nullopt, "complete or cocktail party", "neither"});
    for (int k = profile.gamma + 1; k < n; ++k) {
      ++p.checked;
      const ReconfigGraph r = build_reconfig(g, k);
      const bool computed = eulerian_report(r).is_eulerian;
      const bool want = (complete && n % 2 == 1 && k == 2) || (cocktail && k % 2 == 0);
      if (computed) p.eulerian({id, k}, {name, k});
      if (computed != want) p.fail({id, k}, {name, k, verdict(want), verdict(computed)});
      audit_into(r, name, o, p, {id, k});
    }
  });
}

void run_connected_odd_bipartite(int hi, const VerifyOptions& o, Partial& acc) {
  sweep_labeled(1, hi, false, o, acc, [&](const SeedGraph& g, std::uint64_t id, Partial& p) {
    const int n = g.order();
    const ReconfigGraph r = build_reconfig(g, n);
    const EulerReport rep = eulerian_report(r);
    const std::string name = seed_string(g);
    const Key key{id, n};
    ++p.checked;
    if (!rep.is_connected) p.fail(key, {name, n, "connected", "disconnected"});
    if (rep.node_count % 2 == 0)
      p.fail(key, {name, n, "odd order", std::to_string(rep.node_count) + " nodes"});
    if (!parity_bipartition_valid(r))
      p.fail(key, {name, n, "cardinality parity is a proper 2-colouring", "improper"});
    if (rep.odd_degree_count == rep.node_count)
      p.fail(key, {name, n, "some even-degree node", "all degrees odd"});
    audit_into(r, name, o, p, key);
  });
}

void run_gamma_formulas(int hi, const VerifyOptions& o, Partial& acc) {
  struct GammaCase {
    FamilySpec spec;
    int gamma;
    std::optional<int> upper_gamma;
    std::optional<int> universal;
  };
  std::vector<GammaCase> cases;
  for (int n = 1; n <= hi; ++n) cases.push_back({FamilySpec::path(n), (n + 2) / 3, {}, {}});
  for (int n = 3; n <= hi; ++n) cases.push_back({FamilySpec::cycle(n), (n + 2) / 3, {}, {}});
  for (int n = 1; n <= 12; ++n) cases.push_back({FamilySpec::complete(n), 1, {}, {}});
  for (int n = 1; n <= 8; ++n)
    for (int m = 1; m <= n; ++m)
      cases.push_back({FamilySpec::complete_bipartite(m, n), m == 1 ? 1 : 2, {}, {}});
  for (int n = 4; n <= 12; n += 2) cases.push_back({FamilySpec::cocktail(n), 2, {}, 2});
  for (int n = 2; n <= 4; ++n)
    for (const SeedGraph& inner : enumerate_labeled_graphs(n, false))
      cases.push_back({FamilySpec::corona(FamilySpec::explicit_graph(inner)), n, n, {}});

  acc.merge(run_parallel(cases.size(), o.jobs, [&](std::uint64_t i, Partial& p) {
    const GammaCase& c = cases[i];
    const DominationProfile profile = domination_profile(make_family(c.spec));
    const std::string name = c.spec.to_string();
    ++p.checked;
    const auto show = [](const char* what, int v) { return std::string(what) + "=" + std::to_string(v); };
    if (profile.gamma != c.gamma)
      p.fail({i, 0}, {name, std::nullopt, show("gamma", c.gamma), show("gamma", profile.gamma)});
    if (c.upper_gamma && profile.upper_gamma != *c.upper_gamma)
      p.fail({i, 1}, {name, std::nullopt, show("Gamma", *c.upper_gamma),
                      show("Gamma", profile.upper_gamma)});
    if (c.universal && profile.universal_threshold != *c.universal)
      p.fail({i, 2}, {name, std::nullopt, show("universal_threshold", *c.universal),
                      show("universal_threshold", profile.universal_threshold)});
  }));
}

void run_product_samples(int hi, const VerifyOptions& o, Partial& acc) {
  std::mt19937_64 rng(o.product_seed);
  std::uniform_int_distribution<int> part_count(2, 3);
  std::uniform_int_distribution<int> part_order(1, hi);
  std::vector<std::vector<SeedGraph>> samples;
  for (std::size_t s = 0; s < o.product_samples; ++s) {
    std::vector<SeedGraph> parts;
    const int count = part_count(rng);
    for (int f = 0; f < count; ++f) parts.push_back(random_connected_graph(part_order(rng), rng));
    samples.push_back(std::move(parts));
  }
  acc.merge(run_parallel(samples.size(), o.jobs, [&](std::uint64_t i, Partial& p) {
    record_product(samples[i], o, p, {i, 0});
  }));
}

}  // namespace

TheoremReport verify_claim(ClaimId claim, const VerifyOptions& o) {
  const int hi = o.max_n.value_or(default_max_n(claim));
  if (hi > hard_max_n(claim) || hi < 1)
    throw Error(ErrorCode::BoundExceeded, std::string(to_string(claim)) + " supports max n in [1, " +
                                              std::to_string(hard_max_n(claim)) + "], got " +
                                              std::to_string(hi));
  const auto start = std::chrono::steady_clock::now();
  Partial acc;
  std::string bounds;

  switch (claim) {
    case ClaimId::parity_odd:
      bounds = "all labelled graphs, n in " + range(1, hi);
      run_parity_odd(hi, o, acc);
      break;
    case ClaimId::product_decomposition:
      bounds = std::to_string(o.product_samples) + " sampled unions of 2-3 connected parts, part order in " +
               range(1, hi);
      run_product_samples(hi, o, acc);
      break;
    case ClaimId::mixed_parity_lemma:
      bounds = "connected labelled graphs, n in " + range(2, hi);
      run_mixed_parity(hi, o, acc);
      break;
    case ClaimId::dominating_graph_characterization:
      bounds = "connected labelled graphs, n in " + range(2, hi) + ", k = n";
      run_characterization(hi, o, acc);
      break;
    case ClaimId::path_cycle: {
      bounds = "paths and cycles, n in " + range(3, hi) + ", gamma < k < n";
      std::vector<FamilyCase> cases;
      for (int n = 3; n <= hi; ++n) {
        add_restricted_range(cases, FamilySpec::path(n));
        add_restricted_range(cases, FamilySpec::cycle(n));
      }
      check_family_cases(cases, o, acc, expected_from_closed_form);
      break;
    }
    case ClaimId::complete_bipartite: {
      bounds = "K_{m,n}, 1 <= m <= n <= " + std::to_string(hi) + ", gamma < k < m+n";
      std::vector<FamilyCase> cases;
      for (int n = 1; n <= hi; ++n)
        for (int m = 1; m <= n; ++m) add_restricted_range(cases, FamilySpec::complete_bipartite(m, n));
      check_family_cases(cases, o, acc, expected_from_closed_form);
      break;
    }
    case ClaimId::cocktail_k: {
      bounds = "cocktail party graphs, even n in " + range(4, hi) + ", 2 < k <= n";
      std::vector<FamilyCase> cases;
      for (int n = 4; n <= hi; n += 2)
        for (int k = 3; k <= n; ++k) cases.push_back({FamilySpec::cocktail(n), k});
      check_family_cases(cases, o, acc, expected_from_closed_form);
      break;
    }
    case ClaimId::complete_k: {
      bounds = "complete graphs, n in " + range(2, hi) + ", 1 < k < n";
      std::vector<FamilyCase> cases;
      for (int n = 2; n <= hi; ++n)
        for (int k = 2; k < n; ++k) cases.push_back({FamilySpec::complete(n), k});
      check_family_cases(cases, o, acc, expected_from_closed_form);
      break;
    }
    case ClaimId::universal_gamma_set:
      bounds = "connected labelled graphs with every gamma-set dominating, n in " + range(2, hi);
      run_universal_gamma(hi, o, acc);
      break;
    case ClaimId::corona: {
      bounds = "coronas of all labelled graphs, inner n in " + range(2, hi) + ", n < k < 2n";
      std::vector<FamilyCase> cases;
      for (int n = 2; n <= hi; ++n)
        for (const SeedGraph& inner : enumerate_labeled_graphs(n, false))
          for (int k = n + 1; k < 2 * n; ++k)
            cases.push_back({FamilySpec::corona(FamilySpec::explicit_graph(inner)), k});
      check_family_cases(cases, o, acc, expected_from_closed_form);
      break;
    }
    case ClaimId::bipartite_well_dominated: {
      bounds = "C_4 and coronas of labelled bipartite graphs, inner n in " + range(2, hi) +
               ", gamma < k < |V|";
      std::vector<FamilyCase> cases{{FamilySpec::cycle(4), 3}};
      for (int n = 2; n <= hi; ++n)
        for (const SeedGraph& inner : enumerate_labeled_graphs(n, false))
          if (is_bipartite(inner))
            for (int k = n + 1; k < 2 * n; ++k)
              cases.push_back({FamilySpec::corona(FamilySpec::explicit_graph(inner)), k});
      const auto stated = [](const FamilyCase& c) {
        if (c.spec.kind == FamilyKind::cycle) return c.k == 3;
        const int n = family_order(c.spec.parts.at(0));
        return n % 2 == 0 && c.k == n + 1;
      };
      const Hypothesis bipartite_well_dominated = [](const SeedGraph& g) -> std::optional<std::string> {
        if (!is_bipartite(g)) return "not bipartite";
        if (!domination_profile(g).well_dominated) return "not well-dominated";
        return std::nullopt;
      };
      check_family_cases(cases, o, acc, stated, bipartite_well_dominated);
      break;
    }
    case ClaimId::gamma_formulas:
      bounds = "paths n in " + range(1, hi) + ", cycles n in " + range(3, hi) +
               ", K_n n <= 12, K_{m,n} n <= 8, cocktail n <= 12, coronas inner n in [2,4]";
      run_gamma_formulas(hi, o, acc);
      break;
    case ClaimId::dominating_graph_connected_odd_bipartite:
      bounds = "all labelled graphs, n in " + range(1, hi) + ", k = n";
      run_connected_odd_bipartite(hi, o, acc);
      break;
  }

  TheoremReport report = finalize(claim, std::move(bounds), std::move(acc));
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

TheoremReport verify_product_decomposition(const std::vector<SeedGraph>& parts,
                                           const VerifyOptions& o) {
  if (parts.size() < 2)
    throw Error(ErrorCode::InvalidArgument, "product decomposition needs at least two parts");
  for (const auto& part : parts)
    if (part.order() < 1) throw Error(ErrorCode::InvalidArgument, "every part needs a vertex");
  const auto start = std::chrono::steady_clock::now();
  Partial acc;
  record_product(parts, o, acc, {0, 0});
  TheoremReport report = finalize(ClaimId::product_decomposition,
                                  std::to_string(parts.size()) + " given parts", std::move(acc));
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

TheoremReport verify_mixed_parity_lemma(int n_max, const VerifyOptions& options) {
  VerifyOptions o = options;
  o.max_n = n_max;
  return verify_claim(ClaimId::mixed_parity_lemma, o);
}

}  // namespace domgraph
