#include "semimetric/error.hpp"

namespace semimetric {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::DuplicateLabel: return "DuplicateLabel";
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::BadDiagonal: return "BadDiagonal";
    case ErrorKind::NonpositiveOffDiagonal: return "NonpositiveOffDiagonal";
    case ErrorKind::NegativeEntry: return "NegativeEntry";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::CoincidentPoints: return "CoincidentPoints";
    case ErrorKind::UnknownLabel: return "UnknownLabel";
    case ErrorKind::EmptySubset: return "EmptySubset";
    case ErrorKind::EmptyArgument: return "EmptyArgument";
    case ErrorKind::NotDisjoint: return "NotDisjoint";
    case ErrorKind::NotProper: return "NotProper";
    case ErrorKind::TooSmall: return "TooSmall";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::UnknownName: return "UnknownName";
    case ErrorKind::NotABijection: return "NotABijection";
    case ErrorKind::SizeMismatch: return "SizeMismatch";
    case ErrorKind::WrongEdgeCount: return "WrongEdgeCount";
    case ErrorKind::InvalidBipartite: return "InvalidBipartite";
    case ErrorKind::DegreeTooHigh: return "DegreeTooHigh";
    case ErrorKind::NoEdges: return "NoEdges";
    case ErrorKind::NotComponentwiseCompleteBipartite:
      return "NotComponentwiseCompleteBipartite";
    case ErrorKind::WrongSize: return "WrongSize";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::InconsistencyDetected: return "InconsistencyDetected";
  }
  return "UnknownError";
}

bool is_input_error(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError:
    case ErrorKind::DuplicateLabel:
    case ErrorKind::NotSymmetric:
    case ErrorKind::BadDiagonal:
    case ErrorKind::NonpositiveOffDiagonal:
    case ErrorKind::NegativeEntry:
    case ErrorKind::DimensionMismatch:
    case ErrorKind::CoincidentPoints:
      return true;
    default:
      return false;
  }
}

Error::Error(ErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(to_string(kind)) + ": " + detail),
      kind_(kind),
      detail_(detail) {}

}  // namespace semimetric
