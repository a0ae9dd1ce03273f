#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace domgraph {

enum class ErrorCode {
  InvalidArgument,
  InvalidFamilyParameters,
  CapacityExceeded,
  MalformedGraph6,
  BoundExceeded,
  DimensionMismatch,
  EmptyGraph,
  ReconfigTooLarge,
  BoundBelowGamma,
  NotDominating,
  NotEulerian,
  NoEdges,
  NotSeedBuilt,
  UncharacterizedInstance,
  ClaimUnknown,
  GraphSpecSyntax,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library carries one of the codes above so the
// CLI can map it onto an exit status.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

}  // namespace domgraph
