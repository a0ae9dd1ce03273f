#include "domgraph/reconfig.hpp"

#include <sstream>

namespace domgraph {

std::string to_dot(const ReconfigGraph& r, LabelStyle style) {
  std::ostringstream out;
  out << "graph D {\n";
  for (std::size_t i = 0; i < r.node_count(); ++i)
    out << "  " << i << " [label=\"" << r.node_label(i, style) << "\"];\n";
  for (std::size_t i = 0; i < r.node_count(); ++i)
    for (std::uint32_t j : r.neighbors(i))
      if (j > i) out << "  " << i << " -- " << j << ";\n";
  out << "}\n";
  return out.str();
}

// Neighbour ids share one field, separated by spaces.
std::string to_adjacency_csv(const ReconfigGraph& r) {
  std::ostringstream out;
  out << "node_id,neighbor_ids\n";
  for (std::size_t i = 0; i < r.node_count(); ++i) {
    out << i << ',';
    bool first = true;
    for (std::uint32_t j : r.neighbors(i)) {
      out << (first ? "" : " ") << j;
      first = false;
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace domgraph
