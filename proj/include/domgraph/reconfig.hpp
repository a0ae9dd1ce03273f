#pragma once

#include "domgraph/domination.hpp"
#include "domgraph/graph.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace domgraph {

inline constexpr std::size_t kDefaultNodeCap = std::size_t{1} << 22;

enum class LabelStyle { set, bits };

/**
 * An explicit k-dominating graph D_k(G), or a Cartesian product of such
 * graphs. Seed-built graphs carry one VertexSet per node in reconfig_order;
 * products carry a tuple of factor node indices per node instead.
 * Adjacency is stored in compressed rows with sorted neighbour lists.
 */
class ReconfigGraph {
public:
  std::size_t node_count() const { return offsets_.size() - 1; }
  std::size_t edge_count() const { return targets_.size() / 2; }
  std::size_t degree(std::size_t i) const { return offsets_[i + 1] - offsets_[i]; }
  std::span<const std::uint32_t> neighbors(std::size_t i) const {
    return {targets_.data() + offsets_[i], degree(i)};
  }
  bool adjacent(std::size_t i, std::size_t j) const;

  bool seed_built() const { return seed_.has_value(); }
  const SeedGraph& seed() const;
  int k() const { return k_; }

  std::span<const VertexSet> nodes() const;
  const VertexSet& node_set(std::size_t i) const { return nodes()[i]; }
  std::optional<std::size_t> index_of(const VertexSet& s) const;

  // Product graphs only: factor indices of node i (one per factor).
  std::span<const std::uint32_t> tuple_label(std::size_t i) const;
  std::size_t tuple_arity() const { return arity_; }

  std::string node_label(std::size_t i, LabelStyle style = LabelStyle::set) const;

private:
  friend ReconfigGraph build_reconfig(const SeedGraph&, int, std::size_t);
  friend ReconfigGraph cartesian_product(const ReconfigGraph&, const ReconfigGraph&, std::size_t);

  std::optional<SeedGraph> seed_;
  int k_ = 0;
  std::vector<VertexSet> nodes_;
  std::vector<std::size_t> size_offsets_;  // first node of each cardinality, size n+2
  std::vector<std::uint32_t> labels_;      // products: node_count * arity_
  std::size_t arity_ = 0;
  std::vector<std::size_t> offsets_{0};
  std::vector<std::uint32_t> targets_;
};

/**
 * D_k(g): nodes are the dominating sets of size <= k, adjacent when they
 * differ in exactly one vertex. Throws BoundBelowGamma when k < gamma(g) and
 * ReconfigTooLarge when the node count would exceed `node_cap`.
 */
ReconfigGraph build_reconfig(const SeedGraph& g, int k, std::size_t node_cap = kDefaultNodeCap);

// Degree of s in D_k(g) computed from g alone.
int node_degree(const SeedGraph& g, const VertexSet& s, int k);

struct EulerReport {
  std::size_t node_count = 0;
  std::size_t edge_count = 0;
  std::size_t odd_degree_count = 0;
  std::vector<std::size_t> odd_degree_nodes;  // witnesses, capped
  std::size_t isolated_count = 0;
  std::size_t component_count = 0;
  std::size_t nontrivial_component_count = 0;
  bool is_connected = false;
  bool is_eulerian = false;
};

inline constexpr std::size_t kWitnessCap = 16;

// Eulerian means every degree is even and at most one component has an edge;
// isolated nodes do not matter.
EulerReport eulerian_report(const ReconfigGraph& r);

// Closed walk through every edge once, as a node sequence of length
// edge_count + 1. Always continues along the lowest-index unused edge.
std::vector<std::size_t> euler_circuit(const ReconfigGraph& r);

ReconfigGraph cartesian_product(const ReconfigGraph& a, const ReconfigGraph& b,
                                std::size_t node_cap = kDefaultNodeCap);

// Every edge joins sets whose sizes differ by one.
bool parity_bipartition_valid(const ReconfigGraph& r);

std::vector<std::size_t> degree_histogram(const ReconfigGraph& r);

std::string to_dot(const ReconfigGraph& r, LabelStyle style = LabelStyle::set);
std::string to_adjacency_csv(const ReconfigGraph& r);

}  // namespace domgraph
