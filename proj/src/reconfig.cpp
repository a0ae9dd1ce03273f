#include "domgraph/reconfig.hpp"

#include "domgraph/errors.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>

namespace domgraph {

namespace {

constexpr int kDenseIndexOrder = 20;

[[noreturn]] void too_large(std::size_t nodes, std::size_t cap) {
  throw Error(ErrorCode::ReconfigTooLarge, "needs at least " + std::to_string(nodes) +
                                               " nodes, cap is " + std::to_string(cap));
}

}  // namespace

bool ReconfigGraph::adjacent(std::size_t i, std::size_t j) const {
  const auto row = neighbors(i);
  return std::binary_search(row.begin(), row.end(), static_cast<std::uint32_t>(j));
}

const SeedGraph& ReconfigGraph::seed() const {
  if (!seed_) throw Error(ErrorCode::NotSeedBuilt, "product graphs have no seed");
  return *seed_;
}

std::span<const VertexSet> ReconfigGraph::nodes() const {
  if (!seed_) throw Error(ErrorCode::NotSeedBuilt, "product graphs carry tuple labels");
  return nodes_;
}

std::optional<std::size_t> ReconfigGraph::index_of(const VertexSet& s) const {
  if (!seed_) throw Error(ErrorCode::NotSeedBuilt, "product graphs carry tuple labels");
  if (s.universe() != seed_->order()) return std::nullopt;
  const int size = s.size();
  if (size + 1 >= static_cast<int>(size_offsets_.size())) return std::nullopt;
  const auto first = nodes_.begin() + static_cast<std::ptrdiff_t>(size_offsets_[size]);
  const auto last = nodes_.begin() + static_cast<std::ptrdiff_t>(size_offsets_[size + 1]);
  const auto it = std::lower_bound(first, last, s.bits(),
                                   [](const VertexSet& a, Mask m) { return a.bits() < m; });
  if (it == last || it->bits() != s.bits()) return std::nullopt;
  return static_cast<std::size_t>(it - nodes_.begin());
}

std::span<const std::uint32_t> ReconfigGraph::tuple_label(std::size_t i) const {
  if (seed_) throw Error(ErrorCode::InvalidArgument, "seed-built graphs carry vertex sets");
  return {labels_.data() + i * arity_, arity_};
}

std::string ReconfigGraph::node_label(std::size_t i, LabelStyle style) const {
  if (seed_) return style == LabelStyle::set ? nodes_[i].to_string() : nodes_[i].to_bitstring();
  std::string out = "(";
  const auto label = tuple_label(i);
  for (std::size_t f = 0; f < label.size(); ++f) out += (f ? "," : "") + std::to_string(label[f]);
  return out + ")";
}

ReconfigGraph build_reconfig(const SeedGraph& g, int k, std::size_t node_cap) {
  const int n = g.order();
  if (k < 0 || k > n)
    throw Error(ErrorCode::InvalidArgument,
                "k = " + std::to_string(k) + " outside [0, " + std::to_string(n) + "]");
  const DominationTable table(g);

  ReconfigGraph r;
  r.seed_ = g;
  r.k_ = k;
  r.size_offsets_.assign(static_cast<std::size_t>(n) + 2, 0);
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (int size = 0; size <= n; ++size) {
    r.size_offsets_[size] = r.nodes_.size();
    if (size > k) continue;
    if (size == 0) {
      if (table.dominates(0)) r.nodes_.emplace_back(0, n);
      continue;
    }
    for (std::uint64_t m = (std::uint64_t{1} << size) - 1; m < limit;) {
      if (table.dominates(static_cast<Mask>(m))) {
        if (r.nodes_.size() == node_cap) too_large(node_cap + 1, node_cap);
        r.nodes_.emplace_back(static_cast<Mask>(m), n);
      }
      const std::uint64_t low = m & (~m + 1);
      const std::uint64_t ripple = m + low;
      m = (((ripple ^ m) >> 2) / low) | ripple;
    }
  }
  r.size_offsets_[n + 1] = r.nodes_.size();
  if (r.nodes_.empty())
    throw Error(ErrorCode::BoundBelowGamma,
                "no dominating set of size <= " + std::to_string(k));

  // Down-moves need a domination test; up-moves never do, since supersets of
  // dominating sets dominate.
  r.offsets_.assign(1, 0);
  r.offsets_.reserve(r.nodes_.size() + 1);
  std::vector<std::uint32_t> dense;
  if (n <= kDenseIndexOrder) {
    dense.assign(std::size_t{1} << n, 0);
    for (std::size_t i = 0; i < r.nodes_.size(); ++i)
      dense[r.nodes_[i].bits()] = static_cast<std::uint32_t>(i);
  }
  const auto lookup = [&](Mask m) {
    if (!dense.empty()) return dense[m];
    return static_cast<std::uint32_t>(*r.index_of({m, n}));
  };
  std::vector<std::uint32_t> row;
  for (const VertexSet& s : r.nodes_) {
    row.clear();
    const Mask bits = s.bits();
    for (Mask rest = bits; rest; rest &= rest - 1) {
      const Mask smaller = bits & ~(rest & -rest);
      if (table.dominates(smaller)) row.push_back(lookup(smaller));
    }
    if (s.size() < k)
      for (Mask rest = g.vertices() & ~bits; rest; rest &= rest - 1)
        row.push_back(lookup(bits | (rest & -rest)));
    std::sort(row.begin(), row.end());
    r.targets_.insert(r.targets_.end(), row.begin(), row.end());
    r.offsets_.push_back(r.targets_.size());
  }
  return r;
}

int node_degree(const SeedGraph& g, const VertexSet& s, int k) {
  if (s.universe() != g.order())
    throw Error(ErrorCode::DimensionMismatch, "vertex set and seed differ in order");
  if (s.size() > k)
    throw Error(ErrorCode::InvalidArgument, "set larger than the cardinality bound");
  if (!is_dominating(g, s))
    throw Error(ErrorCode::NotDominating, s.to_string() + " does not dominate");
  int down = 0;
  for (Mask rest = s.bits(); rest; rest &= rest - 1)
    if (is_dominating(g, {s.bits() & ~(rest & -rest), s.universe()})) ++down;
  return down + (s.size() < k ? g.order() - s.size() : 0);
}

EulerReport eulerian_report(const ReconfigGraph& r) {
  EulerReport report;
  const std::size_t count = r.node_count();
  report.node_count = count;
  report.edge_count = r.edge_count();
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t d = r.degree(i);
    if (d == 0) ++report.isolated_count;
    if (d % 2 == 1) {
      ++report.odd_degree_count;
      if (report.odd_degree_nodes.size() < kWitnessCap) report.odd_degree_nodes.push_back(i);
    }
  }

  std::vector<char> seen(count, 0);
  std::vector<std::size_t> queue;
  for (std::size_t start = 0; start < count; ++start) {
    if (seen[start]) continue;
    ++report.component_count;
    if (r.degree(start) > 0) ++report.nontrivial_component_count;
    seen[start] = 1;
    queue.assign(1, start);
    for (std::size_t head = 0; head < queue.size(); ++head)
      for (std::uint32_t next : r.neighbors(queue[head]))
        if (!seen[next]) {
          seen[next] = 1;
          queue.push_back(next);
        }
  }
  report.is_connected = report.component_count == 1;
  report.is_eulerian = report.odd_degree_count == 0 && report.nontrivial_component_count <= 1;
  return report;
}

std::vector<std::size_t> euler_circuit(const ReconfigGraph& r) {
  const EulerReport report = eulerian_report(r);
  if (!report.is_eulerian) throw Error(ErrorCode::NotEulerian, "graph is not Eulerian");
  if (report.edge_count == 0) throw Error(ErrorCode::NoEdges, "graph has no edges");

  const std::size_t count = r.node_count();
  const std::uint32_t* base = r.neighbors(0).data();
  // Edge id per adjacency slot; both directions of an edge share an id.
  std::vector<std::size_t> slot_edge(2 * r.edge_count());
  std::size_t next_id = 0;
  std::size_t slot = 0;
  for (std::size_t u = 0; u < count; ++u) {
    for (std::uint32_t v : r.neighbors(u)) {
      if (v > u) {
        slot_edge[slot] = next_id++;
      } else {
        const auto row = r.neighbors(v);
        const auto back = std::lower_bound(row.begin(), row.end(), static_cast<std::uint32_t>(u));
        slot_edge[slot] = slot_edge[static_cast<std::size_t>(&*back - base)];
      }
      ++slot;
    }
  }

  std::vector<char> used(r.edge_count(), 0);
  std::vector<std::size_t> cursor(count, 0);
  std::size_t start = 0;
  while (r.degree(start) == 0) ++start;

  std::vector<std::size_t> stack{start};
  std::vector<std::size_t> circuit;
  circuit.reserve(r.edge_count() + 1);
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    const auto row = r.neighbors(v);
    const std::size_t row_start = static_cast<std::size_t>(row.data() - base);
    std::size_t& c = cursor[v];
    while (c < row.size() && used[slot_edge[row_start + c]]) ++c;
    if (c == row.size()) {
      circuit.push_back(v);
      stack.pop_back();
    } else {
      used[slot_edge[row_start + c]] = 1;
      stack.push_back(row[c]);
    }
  }
  std::reverse(circuit.begin(), circuit.end());
  return circuit;
}

ReconfigGraph cartesian_product(const ReconfigGraph& a, const ReconfigGraph& b,
                                std::size_t node_cap) {
  const std::size_t na = a.node_count(), nb = b.node_count();
  if (nb != 0 && na > node_cap / nb) too_large(na * nb, node_cap);

  const auto label_of = [](const ReconfigGraph& f, std::size_t i) {
    if (f.seed_built()) return std::vector<std::uint32_t>{static_cast<std::uint32_t>(i)};
    const auto l = f.tuple_label(i);
    return std::vector<std::uint32_t>(l.begin(), l.end());
  };

  ReconfigGraph p;
  p.k_ = a.k() + b.k();
  p.arity_ = (a.seed_built() ? 1 : a.tuple_arity()) + (b.seed_built() ? 1 : b.tuple_arity());
  p.labels_.reserve(na * nb * p.arity_);
  p.offsets_.assign(1, 0);
  std::vector<std::uint32_t> row;
  for (std::size_t i = 0; i < na; ++i) {
    const auto left = label_of(a, i);
    for (std::size_t j = 0; j < nb; ++j) {
      p.labels_.insert(p.labels_.end(), left.begin(), left.end());
      const auto right = label_of(b, j);
      p.labels_.insert(p.labels_.end(), right.begin(), right.end());

      row.clear();
      for (std::uint32_t i2 : a.neighbors(i)) row.push_back(static_cast<std::uint32_t>(i2 * nb + j));
      for (std::uint32_t j2 : b.neighbors(j)) row.push_back(static_cast<std::uint32_t>(i * nb + j2));
      std::sort(row.begin(), row.end());
      p.targets_.insert(p.targets_.end(), row.begin(), row.end());
      p.offsets_.push_back(p.targets_.size());
    }
  }
  return p;
}

bool parity_bipartition_valid(const ReconfigGraph& r) {
  const auto nodes = r.nodes();
  for (std::size_t i = 0; i < nodes.size(); ++i)
    for (std::uint32_t j : r.neighbors(i))
      if (std::abs(nodes[i].size() - nodes[j].size()) != 1) return false;
  return true;
}

std::vector<std::size_t> degree_histogram(const ReconfigGraph& r) {
  std::vector<std::size_t> histogram;
  for (std::size_t i = 0; i < r.node_count(); ++i) {
    const std::size_t d = r.degree(i);
    if (d >= histogram.size()) histogram.resize(d + 1, 0);
    ++histogram[d];
  }
  return histogram;
}

}  // namespace domgraph
