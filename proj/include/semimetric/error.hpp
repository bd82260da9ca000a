#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace semimetric {

enum class ErrorKind {
  // malformed input
  ParseError,
  DuplicateLabel,
  NotSymmetric,
  BadDiagonal,
  NonpositiveOffDiagonal,
  NegativeEntry,
  DimensionMismatch,
  CoincidentPoints,
  // precondition violations
  UnknownLabel,
  EmptySubset,
  EmptyArgument,
  NotDisjoint,
  NotProper,
  TooSmall,
  TooLarge,
  UnknownName,
  NotABijection,
  SizeMismatch,
  WrongEdgeCount,
  InvalidBipartite,
  DegreeTooHigh,
  NoEdges,
  NotComponentwiseCompleteBipartite,
  WrongSize,
  InvalidArgument,
  // internal
  InconsistencyDetected,
};

std::string_view to_string(ErrorKind kind);

/// True for the kinds that describe a malformed space or graph description
/// rather than a violated operation precondition.
bool is_input_error(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail);

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

}  // namespace semimetric
