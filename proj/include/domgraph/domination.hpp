#pragma once

#include "domgraph/graph.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace domgraph {

/// A subset of the vertices of an n-vertex seed graph.
class VertexSet {
public:
  VertexSet() = default;
  VertexSet(Mask bits, int universe);

  static VertexSet empty(int universe) { return {0, universe}; }
  static VertexSet all(int universe) { return {full_mask(universe), universe}; }

  Mask bits() const { return bits_; }
  int universe() const { return universe_; }
  int size() const;
  bool contains(int v) const { return (bits_ >> v) & 1U; }

  VertexSet with(int v) const { return {bits_ | bit(v), universe_}; }
  VertexSet without(int v) const { return {bits_ & ~bit(v), universe_}; }

  std::vector<int> members() const;
  std::string to_string() const;     // "{0,2}"
  std::string to_bitstring() const;  // vertex 0 first: "1010"

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
  Mask bits_ = 0;
  int universe_ = 0;
};

// Node order used throughout: cardinality first, then mask value.
inline bool reconfig_order(const VertexSet& a, const VertexSet& b) {
  const int sa = a.size(), sb = b.size();
  return sa != sb ? sa < sb : a.bits() < b.bits();
}

/**
 * O(1) domination test for one seed graph. The closed-neighbourhood union of
 * every subset of the low and high halves of the vertex range is tabulated,
 * so a subset dominates iff the two table entries cover V.
 */
class DominationTable {
public:
  explicit DominationTable(const SeedGraph& g);

  int order() const { return n_; }
  Mask cover(Mask s) const { return low_[s & low_mask_] | high_[s >> low_bits_]; }
  bool dominates(Mask s) const { return cover(s) == all_; }

  // Number of v in s such that s \ {v} still dominates.
  int removable_count(Mask s) const;
  bool is_minimal(Mask s) const { return dominates(s) && removable_count(s) == 0; }

private:
  int n_ = 0;
  int low_bits_ = 0;
  Mask low_mask_ = 0;
  Mask all_ = 0;
  std::vector<Mask> low_;
  std::vector<Mask> high_;
};

bool is_dominating(const SeedGraph& g, const VertexSet& s);
bool is_minimal_dominating(const SeedGraph& g, const VertexSet& s);

// All dominating sets of size <= k in reconfig_order.
std::vector<VertexSet> enumerate_dominating_sets(const SeedGraph& g, int k);

struct DominationProfile {
  int order = 0;
  int gamma = 0;        // smallest dominating set
  int upper_gamma = 0;  // largest minimal dominating set
  std::vector<std::uint64_t> counts_by_size;  // index 0..order
  std::uint64_t total_count = 0;
  int universal_threshold = 0;  // least t such that every t-subset dominates
  bool well_dominated = false;
};

DominationProfile domination_profile(const SeedGraph& g);

std::uint64_t binomial(int n, int k);

}  // namespace domgraph
