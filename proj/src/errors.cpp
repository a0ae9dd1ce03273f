#include "domgraph/errors.hpp"

namespace domgraph {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::InvalidFamilyParameters: return "InvalidFamilyParameters";
    case ErrorCode::CapacityExceeded: return "CapacityExceeded";
    case ErrorCode::MalformedGraph6: return "MalformedGraph6";
    case ErrorCode::BoundExceeded: return "BoundExceeded";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::EmptyGraph: return "EmptyGraph";
    case ErrorCode::ReconfigTooLarge: return "ReconfigTooLarge";
    case ErrorCode::BoundBelowGamma: return "BoundBelowGamma";
    case ErrorCode::NotDominating: return "NotDominating";
    case ErrorCode::NotEulerian: return "NotEulerian";
    case ErrorCode::NoEdges: return "NoEdges";
    case ErrorCode::NotSeedBuilt: return "NotSeedBuilt";
    case ErrorCode::UncharacterizedInstance: return "UncharacterizedInstance";
    case ErrorCode::ClaimUnknown: return "ClaimUnknown";
    case ErrorCode::GraphSpecSyntax: return "GraphSpecSyntax";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace domgraph
