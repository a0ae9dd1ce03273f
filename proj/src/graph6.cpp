#include "domgraph/errors.hpp"
#include "domgraph/graph.hpp"

namespace domgraph {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

[[noreturn]] void malformed(const std::string& what) {
  throw Error(ErrorCode::MalformedGraph6, what);
}

int sixbits(char c, std::size_t pos) {
  const int value = static_cast<unsigned char>(c);
  if (value < 63 || value > 126)
    malformed("byte " + std::to_string(pos) + " out of printable range");
  return value - 63;
}

}  // namespace

SeedGraph parse_graph6(std::string_view text) {
  if (text.substr(0, kHeader.size()) == kHeader) text.remove_prefix(kHeader.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) malformed("empty record");

  std::size_t pos = 0;
  std::uint64_t n = 0;
  if (static_cast<unsigned char>(text[0]) != 126) {
    n = static_cast<std::uint64_t>(sixbits(text[0], 0));
    pos = 1;
  } else {
    const bool wide = text.size() > 1 && static_cast<unsigned char>(text[1]) == 126;
    const std::size_t start = wide ? 2 : 1;
    const std::size_t digits = wide ? 6 : 3;
    if (text.size() < start + digits) malformed("truncated vertex count");
    for (std::size_t i = start; i < start + digits; ++i) n = (n << 6) | sixbits(text[i], i);
    pos = start + digits;
  }
  if (n > static_cast<std::uint64_t>(kMaxVertices))
    throw Error(ErrorCode::CapacityExceeded,
                std::to_string(n) + " vertices exceeds the cap of " + std::to_string(kMaxVertices));

  const int order = static_cast<int>(n);
  const std::size_t bits = static_cast<std::size_t>(edge_slot_count(order));
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() - pos != bytes)
    malformed("expected " + std::to_string(bytes) + " edge bytes, found " +
              std::to_string(text.size() - pos));

  SeedGraph g(order);
  std::size_t slot = 0;
  int u = 0, v = 1;
  for (std::size_t i = 0; i < bytes; ++i) {
    const int chunk = sixbits(text[pos + i], pos + i);
    for (int b = 5; b >= 0; --b, ++slot) {
      const bool set = (chunk >> b) & 1;
      if (slot >= bits) {
        if (set) malformed("non-zero padding bits");
        continue;
      }
      if (set) g.add_edge(u, v);
      if (++u == v) {
        u = 0;
        ++v;
      }
    }
  }
  return g;
}

std::string to_graph6(const SeedGraph& g) {
  const int n = g.order();
  std::string out;
  out.push_back(static_cast<char>(63 + n));  // n <= kMaxVertices < 63
  int chunk = 0, filled = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) {
      chunk = (chunk << 1) | (g.adjacent(u, v) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + chunk));
        chunk = filled = 0;
      }
    }
  if (filled > 0) out.push_back(static_cast<char>(63 + (chunk << (6 - filled))));
  return out;
}

}  // namespace domgraph
