#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace domgraph {

// One bit per seed vertex. Seed graphs never exceed kMaxVertices, so every
// vertex subset fits in a single word.
using Mask = std::uint32_t;

inline constexpr int kMaxVertices = 26;

inline constexpr Mask bit(int v) { return Mask{1} << v; }

inline constexpr Mask full_mask(int n) {
  return n >= 32 ? ~Mask{0} : (Mask{1} << n) - 1;
}

/**
 * Small simple undirected graph stored as per-vertex neighbour bitmasks.
 * Vertices are 0..order()-1.
 */
class SeedGraph {
public:
  SeedGraph() = default;
  explicit SeedGraph(int n, std::string name = {});

  // Validates symmetry, loop-freeness and range of every row.
  static SeedGraph from_adjacency(std::vector<Mask> adjacency, std::string name = {});
  static SeedGraph from_edges(int n, const std::vector<std::pair<int, int>>& edges,
                              std::string name = {});

  int order() const { return static_cast<int>(adj_.size()); }
  Mask vertices() const { return full_mask(order()); }
  Mask neighbors(int v) const { return adj_[v]; }
  Mask closed_neighborhood(int v) const { return adj_[v] | bit(v); }
  int degree(int v) const;
  bool adjacent(int u, int v) const { return (adj_[u] >> v) & 1U; }

  int edge_count() const;
  // Edges (u, v) with u < v, sorted lexicographically.
  std::vector<std::pair<int, int>> edges() const;

  void add_edge(int u, int v);
  void remove_edge(int u, int v);
  void toggle_edge(int u, int v);

  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  const std::vector<Mask>& adjacency() const { return adj_; }

  // Structural equality; names are ignored.
  friend bool operator==(const SeedGraph& a, const SeedGraph& b) { return a.adj_ == b.adj_; }

private:
  void check_pair(int u, int v) const;

  std::vector<Mask> adj_;
  std::string name_;
};

// ---------------------------------------------------------------- families

enum class FamilyKind {
  path,
  cycle,
  complete,
  complete_bipartite,
  star,
  cocktail,
  turan,
  corona,
  disjoint_union,
  explicit_graph,  // an arbitrary seed carried verbatim (graph6, edge list)
};

std::string_view to_string(FamilyKind kind);

struct FamilySpec {
  FamilyKind kind = FamilyKind::path;
  std::vector<int> params;
  std::vector<FamilySpec> parts;   // corona: one inner spec; union: two or more
  std::optional<SeedGraph> graph;  // explicit_graph only

  static FamilySpec path(int n) { return {FamilyKind::path, {n}, {}, {}}; }
  static FamilySpec cycle(int n) { return {FamilyKind::cycle, {n}, {}, {}}; }
  static FamilySpec complete(int n) { return {FamilyKind::complete, {n}, {}, {}}; }
  static FamilySpec complete_bipartite(int m, int n) {
    return {FamilyKind::complete_bipartite, {m, n}, {}, {}};
  }
  static FamilySpec star(int n) { return {FamilyKind::star, {n}, {}, {}}; }
  static FamilySpec cocktail(int n) { return {FamilyKind::cocktail, {n}, {}, {}}; }
  static FamilySpec turan(int n, int r) { return {FamilyKind::turan, {n, r}, {}, {}}; }
  static FamilySpec corona(FamilySpec inner);
  static FamilySpec disjoint_union(std::vector<FamilySpec> parts);
  static FamilySpec explicit_graph(SeedGraph g);

  // Textual form accepted by the CLI ("biclique:3,4", "corona:path:3", ...).
  std::string to_string() const;
};

// Vertex count of the graph the spec describes, without building it.
int family_order(const FamilySpec& spec);

/**
 * Canonical labelled instance of a family:
 *  - path/cycle: vertices 0..n-1 in order, cycle closes n-1 -- 0
 *  - complete_bipartite(m,n): X = {0..m-1}, Y = {m..m+n-1}; star(n) = K_{1,n}
 *  - cocktail(n): K_n minus the matching {(2i, 2i+1)}
 *  - turan(n,r): consecutive parts, the first n mod r parts one larger
 *  - corona(G): pendant n+i attached to vertex i of G
 *  - disjoint_union: operands relabelled by running offset
 */
SeedGraph make_family(const FamilySpec& spec);

SeedGraph path_graph(int n);
SeedGraph cycle_graph(int n);
SeedGraph complete_graph(int n);
SeedGraph complete_bipartite_graph(int m, int n);
SeedGraph cocktail_party_graph(int n);
SeedGraph turan_graph(int n, int r);
SeedGraph corona(const SeedGraph& g);
SeedGraph disjoint_union(const std::vector<SeedGraph>& parts);

// ------------------------------------------------------------- structure

bool is_cocktail_party(const SeedGraph& g);
bool is_complete(const SeedGraph& g);
bool is_bipartite(const SeedGraph& g);

// Component vertex sets ordered by their minimum vertex.
std::vector<Mask> connected_components(const SeedGraph& g);
bool is_connected(const SeedGraph& g);

// Subgraph induced by `vertices`, relabelled 0..|vertices|-1 in increasing order.
SeedGraph induced_subgraph(const SeedGraph& g, Mask vertices);

// ------------------------------------------------------ labelled enumeration

inline constexpr int kMaxEnumerationOrder = 7;

// Edge slot of the pair (u, v), u < v, in graph6 column order:
// (0,1), (0,2), (1,2), (0,3), ...
inline constexpr int edge_slot(int u, int v) { return v * (v - 1) / 2 + u; }
inline constexpr int edge_slot_count(int n) { return n * (n - 1) / 2; }

std::uint64_t labeled_graph_count(int n);
SeedGraph labeled_graph(int n, std::uint64_t edge_mask);
std::uint64_t edge_mask_of(const SeedGraph& g);

/**
 * Visits every labelled graph on n vertices with edge mask in [first, last)
 * in increasing mask order, skipping disconnected ones when requested.
 * The callback receives the graph and its edge mask.
 */
void for_each_labeled_graph(int n, bool connected_only,
                            const std::function<void(const SeedGraph&, std::uint64_t)>& visit,
                            std::uint64_t first = 0,
                            std::uint64_t last = ~std::uint64_t{0});

std::vector<SeedGraph> enumerate_labeled_graphs(int n, bool connected_only);

// ------------------------------------------------------------ interchange

SeedGraph parse_graph6(std::string_view text);
std::string to_graph6(const SeedGraph& g);

std::string to_dot(const SeedGraph& g);

}  // namespace domgraph
