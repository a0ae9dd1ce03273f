#include "domgraph/domination.hpp"

#include "domgraph/errors.hpp"

#include <bit>

namespace domgraph {

VertexSet::VertexSet(Mask bits, int universe) : bits_(bits), universe_(universe) {
  if (universe < 0 || universe > kMaxVertices)
    throw Error(ErrorCode::CapacityExceeded, "vertex set universe " + std::to_string(universe));
  if (bits & ~full_mask(universe))
    throw Error(ErrorCode::InvalidArgument, "vertex set has members outside [0, n)");
}

int VertexSet::size() const { return std::popcount(bits_); }

std::vector<int> VertexSet::members() const {
  std::vector<int> out;
  for (Mask rest = bits_; rest; rest &= rest - 1) out.push_back(std::countr_zero(rest));
  return out;
}

std::string VertexSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int v : members()) {
    if (!first) out += ',';
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

std::string VertexSet::to_bitstring() const {
  std::string out;
  for (int v = 0; v < universe_; ++v) out += contains(v) ? '1' : '0';
  return out;
}

DominationTable::DominationTable(const SeedGraph& g)
    : n_(g.order()), low_bits_(g.order() / 2), low_mask_(full_mask(g.order() / 2)),
      all_(g.vertices()) {
  const int high_bits = n_ - low_bits_;
  low_.assign(std::size_t{1} << low_bits_, 0);
  high_.assign(std::size_t{1} << high_bits, 0);
  for (std::size_t s = 1; s < low_.size(); ++s) {
    const Mask m = static_cast<Mask>(s);
    low_[s] = low_[m & (m - 1)] | g.closed_neighborhood(std::countr_zero(m));
  }
  for (std::size_t s = 1; s < high_.size(); ++s) {
    const Mask m = static_cast<Mask>(s);
    high_[s] = high_[m & (m - 1)] | g.closed_neighborhood(low_bits_ + std::countr_zero(m));
  }
}

int DominationTable::removable_count(Mask s) const {
  int count = 0;
  for (Mask rest = s; rest; rest &= rest - 1)
    if (dominates(s & ~(rest & -rest))) ++count;
  return count;
}

namespace {

void require_same_universe(const SeedGraph& g, const VertexSet& s) {
  if (s.universe() != g.order())
    throw Error(ErrorCode::DimensionMismatch, "vertex set over " + std::to_string(s.universe()) +
                                                  " vertices, graph has " +
                                                  std::to_string(g.order()));
}

bool covers(const SeedGraph& g, Mask s) {
  Mask covered = 0;
  for (Mask rest = s; rest; rest &= rest - 1) covered |= g.closed_neighborhood(std::countr_zero(rest));
  return covered == g.vertices();
}

}  // namespace

bool is_dominating(const SeedGraph& g, const VertexSet& s) {
  require_same_universe(g, s);
  return covers(g, s.bits());
}

bool is_minimal_dominating(const SeedGraph& g, const VertexSet& s) {
  require_same_universe(g, s);
  if (!covers(g, s.bits())) return false;
  for (Mask rest = s.bits(); rest; rest &= rest - 1)
    if (covers(g, s.bits() & ~(rest & -rest))) return false;
  return true;
}

std::vector<VertexSet> enumerate_dominating_sets(const SeedGraph& g, int k) {
  const int n = g.order();
  if (k < 0 || k > n)
    throw Error(ErrorCode::InvalidArgument,
                "cardinality bound " + std::to_string(k) + " outside [0, " + std::to_string(n) + "]");
  const DominationTable table(g);
  std::vector<VertexSet> out;
  for (int size = 0; size <= k; ++size) {
    if (size == 0) {
      if (table.dominates(0)) out.emplace_back(0, n);
      continue;
    }
    // Gosper's hack walks the size-subsets in increasing numeric order.
    const std::uint64_t limit = std::uint64_t{1} << n;
    for (std::uint64_t m = (std::uint64_t{1} << size) - 1; m < limit;) {
      if (table.dominates(static_cast<Mask>(m))) out.emplace_back(static_cast<Mask>(m), n);
      const std::uint64_t low = m & (~m + 1);
      const std::uint64_t ripple = m + low;
      m = (((ripple ^ m) >> 2) / low) | ripple;
    }
  }
  return out;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t result = 1;
  for (int i = 1; i <= k; ++i) result = result * static_cast<std::uint64_t>(n - k + i) / i;
  return result;
}

DominationProfile domination_profile(const SeedGraph& g) {
  const int n = g.order();
  if (n == 0) throw Error(ErrorCode::EmptyGraph, "domination profile of the empty graph");
  const DominationTable table(g);

  DominationProfile p;
  p.order = n;
  p.counts_by_size.assign(static_cast<std::size_t>(n) + 1, 0);
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t m = 0; m < limit; ++m) {
    const Mask s = static_cast<Mask>(m);
    if (!table.dominates(s)) continue;
    const int size = std::popcount(s);
    ++p.counts_by_size[size];
    if (size > p.upper_gamma && table.removable_count(s) == 0) p.upper_gamma = size;
  }
  for (auto c : p.counts_by_size) p.total_count += c;

  p.gamma = 0;
  while (p.counts_by_size[p.gamma] == 0) ++p.gamma;
  p.universal_threshold = n;
  while (p.universal_threshold > 0 &&
         p.counts_by_size[p.universal_threshold - 1] == binomial(n, p.universal_threshold - 1))
    --p.universal_threshold;
  p.well_dominated = p.gamma == p.upper_gamma;
  return p;
}

}  // namespace domgraph
