#pragma once

// Brute-force reference computations used by the tests. Nothing here touches
// the library's enumeration or adjacency code; graphs are plain edge lists.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;

  bool adjacent(int u, int v) const {
    for (const auto& [a, b] : edges)
      if ((a == u && b == v) || (a == v && b == u)) return true;
    return false;
  }
};

inline bool dominates(const Graph& g, const std::vector<int>& s) {
  for (int v = 0; v < g.n; ++v) {
    bool hit = false;
    for (int u : s) hit = hit || u == v || g.adjacent(u, v);
    if (!hit) return false;
  }
  return true;
}

inline std::vector<int> members(std::uint64_t m, int n) {
  std::vector<int> out;
  for (int v = 0; v < n; ++v)
    if ((m >> v) & 1) out.push_back(v);
  return out;
}

// D_k(g) with nodes as sorted vertex lists and edges as index pairs.
struct Reconfig {
  std::vector<std::vector<int>> nodes;
  std::set<std::pair<std::size_t, std::size_t>> edges;

  std::vector<int> degrees() const {
    std::vector<int> d(nodes.size(), 0);
    for (const auto& [a, b] : edges) ++d[a], ++d[b];
    return d;
  }
};

inline Reconfig reconfig(const Graph& g, int k) {
  Reconfig r;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << g.n); ++m) {
    auto s = members(m, g.n);
    if (static_cast<int>(s.size()) <= k && dominates(g, s)) r.nodes.push_back(s);
  }
  for (std::size_t i = 0; i < r.nodes.size(); ++i)
    for (std::size_t j = i + 1; j < r.nodes.size(); ++j) {
      std::vector<int> diff;
      std::set_symmetric_difference(r.nodes[i].begin(), r.nodes[i].end(), r.nodes[j].begin(),
                                    r.nodes[j].end(), std::back_inserter(diff));
      if (diff.size() == 1) r.edges.insert({i, j});
    }
  return r;
}

inline bool connected(std::size_t count, const std::set<std::pair<std::size_t, std::size_t>>& edges) {
  if (count == 0) return true;
  std::vector<std::size_t> parent(count);
  for (std::size_t i = 0; i < count; ++i) parent[i] = i;
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t parts = count;
  for (const auto& [a, b] : edges) {
    const auto ra = find(a), rb = find(b);
    if (ra != rb) parent[ra] = rb, --parts;
  }
  return parts == 1;
}

// Eulerian: all degrees even, and the nodes that carry edges form one component.
inline bool eulerian(const Reconfig& r) {
  const auto d = r.degrees();
  if (std::any_of(d.begin(), d.end(), [](int x) { return x % 2; })) return false;
  std::map<std::size_t, std::size_t> relabel;
  for (const auto& [a, b] : r.edges) relabel.emplace(a, relabel.size()), relabel.emplace(b, relabel.size());
  std::set<std::pair<std::size_t, std::size_t>> sub;
  for (const auto& [a, b] : r.edges) sub.insert({relabel[a], relabel[b]});
  return connected(relabel.size(), sub);
}

inline bool graph_connected(const Graph& g) {
  std::set<std::pair<std::size_t, std::size_t>> e;
  for (const auto& [a, b] : g.edges) e.insert({std::size_t(a), std::size_t(b)});
  return connected(static_cast<std::size_t>(g.n), e);
}

// Complement is a perfect matching: every vertex misses exactly one other.
inline bool cocktail_party(const Graph& g) {
  if (g.n == 0 || g.n % 2) return false;
  for (int v = 0; v < g.n; ++v) {
    int missing = 0;
    for (int u = 0; u < g.n; ++u)
      if (u != v && !g.adjacent(u, v)) ++missing;
    if (missing != 1) return false;
  }
  return true;
}

// Number of perfect matchings of K_n: (n-1)!!.
inline std::uint64_t matchings(int n) {
  std::uint64_t out = 1;
  for (int i = n - 1; i > 0; i -= 2) out *= static_cast<std::uint64_t>(i);
  return n % 2 ? 0 : out;
}

}  // namespace oracle
