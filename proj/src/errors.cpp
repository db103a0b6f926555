#include "critforge/errors.hpp"

namespace critforge {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::EmptyGraph: return "EmptyGraph";
    case ErrorKind::DisconnectedGraph: return "DisconnectedGraph";
    case ErrorKind::LoopEdge: return "LoopEdge";
    case ErrorKind::UnknownVertex: return "UnknownVertex";
    case ErrorKind::UnknownEdge: return "UnknownEdge";
    case ErrorKind::NotATree: return "NotATree";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NonpositiveOrder: return "NonpositiveOrder";
    case ErrorKind::InvalidGroup: return "InvalidGroup";
    case ErrorKind::NotADirectSummand: return "NotADirectSummand";
    case ErrorKind::MissingVertexValue: return "MissingVertexValue";
    case ErrorKind::DivisibilityViolation: return "DivisibilityViolation";
    case ErrorKind::RankDefect: return "RankDefect";
    case ErrorKind::NonIntegralOrder: return "NonIntegralOrder";
    case ErrorKind::NonzeroDegree: return "NonzeroDegree";
    case ErrorKind::SizeViolation: return "SizeViolation";
    case ErrorKind::NotStarlike: return "NotStarlike";
    case ErrorKind::TooManyFactors: return "TooManyFactors";
    case ErrorKind::BetaOutOfRange: return "BetaOutOfRange";
    case ErrorKind::PathWithNontrivialTarget: return "PathWithNontrivialTarget";
    case ErrorKind::TreeTooLarge: return "TreeTooLarge";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::InternalInconsistency: return "InternalInconsistency";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message),
      kind_(kind) {}

}  // namespace critforge
