#pragma once

#include "domgraph/graph.hpp"

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace domgraph {

/**
 * Parses a graph spec string:
 *
 *   path:7  cycle:7  complete:5  biclique:3,4  star:5  cocktail:6  turan:6,3
 *   corona:<spec>  union:<spec>+<spec>[+...]  g6:<record>  file:<edge list>
 *
 * An edge-list file holds one "u v" pair per line; blank lines and lines
 * starting with '#' are ignored, and the order is the largest id plus one.
 * Syntax errors throw GraphSpecSyntax with the offending position.
 */
FamilySpec parse_graph_spec(std::string_view text);

enum ExitCode : int {
  kExitOk = 0,
  kExitClaimFailed = 1,
  kExitUsage = 2,
  kExitCapacity = 3,
};

// Runs one CLI invocation; `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace domgraph
