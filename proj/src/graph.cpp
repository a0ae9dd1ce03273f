#include "domgraph/graph.hpp"

#include "domgraph/errors.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace domgraph {

namespace {

void require_capacity(int n) {
  if (n > kMaxVertices)
    throw Error(ErrorCode::CapacityExceeded,
                std::to_string(n) + " vertices exceeds the cap of " +
                    std::to_string(kMaxVertices));
}

void family_error(const std::string& what) {
  throw Error(ErrorCode::InvalidFamilyParameters, what);
}

void expect_params(const FamilySpec& spec, std::size_t count) {
  if (spec.params.size() != count)
    family_error(std::string(to_string(spec.kind)) + " takes " + std::to_string(count) +
                 " integer parameter(s)");
}

}  // namespace

SeedGraph::SeedGraph(int n, std::string name) : name_(std::move(name)) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "negative vertex count");
  require_capacity(n);
  adj_.assign(static_cast<std::size_t>(n), 0);
}

SeedGraph SeedGraph::from_adjacency(std::vector<Mask> adjacency, std::string name) {
  const int n = static_cast<int>(adjacency.size());
  require_capacity(n);
  const Mask all = full_mask(n);
  for (int v = 0; v < n; ++v) {
    const Mask row = adjacency[v];
    if (row & ~all)
      throw Error(ErrorCode::InvalidArgument,
                  "row " + std::to_string(v) + " has a neighbour outside [0, n)");
    if (row & bit(v))
      throw Error(ErrorCode::InvalidArgument, "self-loop at vertex " + std::to_string(v));
    for (Mask rest = row; rest; rest &= rest - 1) {
      const int u = std::countr_zero(rest);
      if (!((adjacency[u] >> v) & 1U))
        throw Error(ErrorCode::InvalidArgument, "asymmetric adjacency between " +
                                                    std::to_string(v) + " and " +
                                                    std::to_string(u));
    }
  }
  SeedGraph g;
  g.adj_ = std::move(adjacency);
  g.name_ = std::move(name);
  return g;
}

SeedGraph SeedGraph::from_edges(int n, const std::vector<std::pair<int, int>>& edges,
                                std::string name) {
  SeedGraph g(n, std::move(name));
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

int SeedGraph::degree(int v) const { return std::popcount(adj_[v]); }

int SeedGraph::edge_count() const {
  int total = 0;
  for (Mask row : adj_) total += std::popcount(row);
  return total / 2;
}

std::vector<std::pair<int, int>> SeedGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < order(); ++u)
    for (Mask rest = adj_[u] & ~full_mask(u + 1); rest; rest &= rest - 1)
      out.emplace_back(u, std::countr_zero(rest));
  return out;
}

void SeedGraph::check_pair(int u, int v) const {
  if (u < 0 || v < 0 || u >= order() || v >= order())
    throw Error(ErrorCode::InvalidArgument, "edge endpoint out of range: " + std::to_string(u) +
                                                " " + std::to_string(v));
  if (u == v) throw Error(ErrorCode::InvalidArgument, "self-loop at vertex " + std::to_string(u));
}

void SeedGraph::add_edge(int u, int v) {
  check_pair(u, v);
  adj_[u] |= bit(v);
  adj_[v] |= bit(u);
}

void SeedGraph::remove_edge(int u, int v) {
  check_pair(u, v);
  adj_[u] &= ~bit(v);
  adj_[v] &= ~bit(u);
}

void SeedGraph::toggle_edge(int u, int v) {
  check_pair(u, v);
  adj_[u] ^= bit(v);
  adj_[v] ^= bit(u);
}

// ---------------------------------------------------------------- families

std::string_view to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::path: return "path";
    case FamilyKind::cycle: return "cycle";
    case FamilyKind::complete: return "complete";
    case FamilyKind::complete_bipartite: return "biclique";
    case FamilyKind::star: return "star";
    case FamilyKind::cocktail: return "cocktail";
    case FamilyKind::turan: return "turan";
    case FamilyKind::corona: return "corona";
    case FamilyKind::disjoint_union: return "union";
    case FamilyKind::explicit_graph: return "g6";
  }
  return "?";
}

FamilySpec FamilySpec::corona(FamilySpec inner) {
  FamilySpec spec{FamilyKind::corona, {}, {}, {}};
  spec.parts.push_back(std::move(inner));
  return spec;
}

FamilySpec FamilySpec::disjoint_union(std::vector<FamilySpec> parts) {
  return {FamilyKind::disjoint_union, {}, std::move(parts), {}};
}

FamilySpec FamilySpec::explicit_graph(SeedGraph g) {
  return {FamilyKind::explicit_graph, {}, {}, std::move(g)};
}

std::string FamilySpec::to_string() const {
  std::ostringstream out;
  out << domgraph::to_string(kind) << ':';
  switch (kind) {
    case FamilyKind::corona:
      out << (parts.empty() ? std::string("?") : parts.front().to_string());
      break;
    case FamilyKind::disjoint_union:
      for (std::size_t i = 0; i < parts.size(); ++i) out << (i ? "+" : "") << parts[i].to_string();
      break;
    case FamilyKind::explicit_graph:
      out << (graph ? to_graph6(*graph) : std::string("?"));
      break;
    default:
      for (std::size_t i = 0; i < params.size(); ++i) out << (i ? "," : "") << params[i];
  }
  return out.str();
}

int family_order(const FamilySpec& spec) {
  switch (spec.kind) {
    case FamilyKind::path:
    case FamilyKind::cycle:
    case FamilyKind::complete:
    case FamilyKind::cocktail:
      expect_params(spec, 1);
      return spec.params[0];
    case FamilyKind::star:
      expect_params(spec, 1);
      return spec.params[0] + 1;
    case FamilyKind::complete_bipartite:
      expect_params(spec, 2);
      return spec.params[0] + spec.params[1];
    case FamilyKind::turan:
      expect_params(spec, 2);
      return spec.params[0];
    case FamilyKind::corona:
      if (spec.parts.size() != 1) family_error("corona takes exactly one inner graph");
      return 2 * family_order(spec.parts[0]);
    case FamilyKind::disjoint_union: {
      int total = 0;
      for (const auto& part : spec.parts) total += family_order(part);
      return total;
    }
    case FamilyKind::explicit_graph:
      if (!spec.graph) family_error("explicit graph spec without a graph");
      return spec.graph->order();
  }
  return 0;
}

SeedGraph path_graph(int n) {
  if (n < 1) family_error("path needs n >= 1");
  require_capacity(n);
  SeedGraph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

SeedGraph cycle_graph(int n) {
  if (n < 3) family_error("cycle needs n >= 3");
  require_capacity(n);
  SeedGraph g = path_graph(n);
  g.add_edge(n - 1, 0);
  return g;
}

SeedGraph complete_graph(int n) {
  if (n < 1) family_error("complete needs n >= 1");
  require_capacity(n);
  SeedGraph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

SeedGraph complete_bipartite_graph(int m, int n) {
  if (m < 1 || n < 1) family_error("biclique needs m, n >= 1");
  require_capacity(m + n);
  SeedGraph g(m + n);
  for (int x = 0; x < m; ++x)
    for (int y = m; y < m + n; ++y) g.add_edge(x, y);
  return g;
}

SeedGraph cocktail_party_graph(int n) {
  if (n < 4 || n % 2 != 0) family_error("cocktail needs an even n >= 4");
  require_capacity(n);
  SeedGraph g = complete_graph(n);
  for (int i = 0; i < n; i += 2) g.remove_edge(i, i + 1);
  return g;
}

SeedGraph turan_graph(int n, int r) {
  if (r < 1 || n < r) family_error("turan needs n >= r >= 1");
  require_capacity(n);
  std::vector<int> part(static_cast<std::size_t>(n));
  int v = 0;
  for (int p = 0; p < r; ++p) {
    const int size = n / r + (p < n % r ? 1 : 0);
    for (int i = 0; i < size; ++i) part[v++] = p;
  }
  SeedGraph g(n);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (part[a] != part[b]) g.add_edge(a, b);
  return g;
}

SeedGraph corona(const SeedGraph& g) {
  const int n = g.order();
  if (n < 2) family_error("corona needs an inner graph with n >= 2");
  require_capacity(2 * n);
  SeedGraph out(2 * n);
  for (auto [u, v] : g.edges()) out.add_edge(u, v);
  for (int i = 0; i < n; ++i) out.add_edge(i, n + i);
  return out;
}

SeedGraph disjoint_union(const std::vector<SeedGraph>& parts) {
  int total = 0;
  for (const auto& part : parts) total += part.order();
  require_capacity(total);
  SeedGraph out(total);
  int offset = 0;
  for (const auto& part : parts) {
    for (auto [u, v] : part.edges()) out.add_edge(u + offset, v + offset);
    offset += part.order();
  }
  return out;
}

SeedGraph make_family(const FamilySpec& spec) {
  // Validates the parameter arity and the capacity before building anything.
  const int order = family_order(spec);
  SeedGraph g;
  switch (spec.kind) {
    case FamilyKind::path: g = path_graph(spec.params[0]); break;
    case FamilyKind::cycle: g = cycle_graph(spec.params[0]); break;
    case FamilyKind::complete: g = complete_graph(spec.params[0]); break;
    case FamilyKind::complete_bipartite:
      g = complete_bipartite_graph(spec.params[0], spec.params[1]);
      break;
    case FamilyKind::star:
      if (spec.params[0] < 1) family_error("star needs n >= 1");
      g = complete_bipartite_graph(1, spec.params[0]);
      break;
    case FamilyKind::cocktail: g = cocktail_party_graph(spec.params[0]); break;
    case FamilyKind::turan: g = turan_graph(spec.params[0], spec.params[1]); break;
    case FamilyKind::corona: {
      if (family_order(spec.parts[0]) < 2) family_error("corona needs an inner graph with n >= 2");
      require_capacity(order);
      g = corona(make_family(spec.parts[0]));
      break;
    }
    case FamilyKind::disjoint_union: {
      if (spec.parts.size() < 2) family_error("union needs at least two operands");
      require_capacity(order);
      std::vector<SeedGraph> parts;
      for (const auto& part : spec.parts) parts.push_back(make_family(part));
      g = disjoint_union(parts);
      break;
    }
    case FamilyKind::explicit_graph: g = *spec.graph; break;
  }
  g.set_name(spec.to_string());
  return g;
}

// ------------------------------------------------------------- structure

bool is_cocktail_party(const SeedGraph& g) {
  const int n = g.order();
  if (n < 4 || n % 2 != 0) return false;
  const Mask all = g.vertices();
  for (int v = 0; v < n; ++v) {
    const Mask missing = all & ~g.closed_neighborhood(v);
    if (std::popcount(missing) != 1) return false;
    const int partner = std::countr_zero(missing);
    if ((all & ~g.closed_neighborhood(partner)) != bit(v)) return false;
  }
  return true;
}

bool is_complete(const SeedGraph& g) {
  for (int v = 0; v < g.order(); ++v)
    if (g.closed_neighborhood(v) != g.vertices()) return false;
  return true;
}

bool is_bipartite(const SeedGraph& g) {
  const int n = g.order();
  std::vector<int> colour(static_cast<std::size_t>(n), -1);
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (colour[s] >= 0) continue;
    colour[s] = 0;
    stack.push_back(s);
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (Mask rest = g.neighbors(v); rest; rest &= rest - 1) {
        const int u = std::countr_zero(rest);
        if (colour[u] < 0) {
          colour[u] = 1 - colour[v];
          stack.push_back(u);
        } else if (colour[u] == colour[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

std::vector<Mask> connected_components(const SeedGraph& g) {
  std::vector<Mask> blocks;
  Mask unseen = g.vertices();
  while (unseen) {
    Mask reached = bit(std::countr_zero(unseen));
    Mask frontier = reached;
    while (frontier) {
      Mask next = 0;
      for (Mask rest = frontier; rest; rest &= rest - 1) next |= g.neighbors(std::countr_zero(rest));
      frontier = next & ~reached;
      reached |= next;
    }
    blocks.push_back(reached);
    unseen &= ~reached;
  }
  return blocks;
}

bool is_connected(const SeedGraph& g) { return connected_components(g).size() <= 1; }

SeedGraph induced_subgraph(const SeedGraph& g, Mask vertices) {
  std::vector<int> relabel(static_cast<std::size_t>(g.order()), -1);
  int next = 0;
  for (Mask rest = vertices; rest; rest &= rest - 1) relabel[std::countr_zero(rest)] = next++;
  SeedGraph out(next);
  for (auto [u, v] : g.edges())
    if (relabel[u] >= 0 && relabel[v] >= 0) out.add_edge(relabel[u], relabel[v]);
  return out;
}

// ------------------------------------------------------ labelled enumeration

namespace {

void require_enumeration_order(int n) {
  if (n < 1 || n > kMaxEnumerationOrder)
    throw Error(ErrorCode::BoundExceeded, "labelled enumeration supports 1 <= n <= " +
                                              std::to_string(kMaxEnumerationOrder) + ", got " +
                                              std::to_string(n));
}

}  // namespace

std::uint64_t labeled_graph_count(int n) {
  require_enumeration_order(n);
  return std::uint64_t{1} << edge_slot_count(n);
}

SeedGraph labeled_graph(int n, std::uint64_t edge_mask) {
  require_capacity(n);
  std::vector<Mask> adj(static_cast<std::size_t>(n), 0);
  int slot = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u, ++slot)
      if ((edge_mask >> slot) & 1U) {
        adj[u] |= bit(v);
        adj[v] |= bit(u);
      }
  SeedGraph g = SeedGraph::from_adjacency(std::move(adj));
  return g;
}

std::uint64_t edge_mask_of(const SeedGraph& g) {
  std::uint64_t mask = 0;
  for (auto [u, v] : g.edges()) mask |= std::uint64_t{1} << edge_slot(u, v);
  return mask;
}

void for_each_labeled_graph(int n, bool connected_only,
                            const std::function<void(const SeedGraph&, std::uint64_t)>& visit,
                            std::uint64_t first, std::uint64_t last) {
  const std::uint64_t count = labeled_graph_count(n);
  last = std::min(last, count);
  for (std::uint64_t mask = first; mask < last; ++mask) {
    const SeedGraph g = labeled_graph(n, mask);
    if (connected_only && !is_connected(g)) continue;
    visit(g, mask);
  }
}

std::vector<SeedGraph> enumerate_labeled_graphs(int n, bool connected_only) {
  std::vector<SeedGraph> out;
  for_each_labeled_graph(n, connected_only,
                         [&](const SeedGraph& g, std::uint64_t) { out.push_back(g); });
  return out;
}

// ------------------------------------------------------------ DOT

std::string to_dot(const SeedGraph& g) {
  std::ostringstream out;
  out << "graph G {\n";
  for (int v = 0; v < g.order(); ++v) out << "  " << v << ";\n";
  for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace domgraph
