#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace critforge {

enum class ErrorKind {
  EmptyGraph,
  DisconnectedGraph,
  LoopEdge,
  UnknownVertex,
  UnknownEdge,
  NotATree,
  IndexOutOfRange,
  DimensionMismatch,
  NonpositiveOrder,
  InvalidGroup,
  NotADirectSummand,
  MissingVertexValue,
  DivisibilityViolation,
  RankDefect,
  NonIntegralOrder,
  NonzeroDegree,
  SizeViolation,
  NotStarlike,
  TooManyFactors,
  BetaOutOfRange,
  PathWithNontrivialTarget,
  TreeTooLarge,
  InvalidArgument,
  InternalInconsistency,
};

std::string_view to_string(ErrorKind kind);

/// Every domain failure in the library is reported as an Error carrying a
/// machine-readable kind; what() holds the human diagnostic.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace critforge
