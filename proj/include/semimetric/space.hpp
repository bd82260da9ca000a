#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "semimetric/rational.hpp"

namespace semimetric {

/// A distance value held as its exact square. Distances are nonnegative, so
/// ordering squares orders the distances.
class Dist {
 public:
  Dist() = default;
  /// Throws Error{NegativeEntry} when sq < 0.
  explicit Dist(Rational sq);
  static Dist from_length(const Rational& length);

  const Rational& sq() const noexcept { return sq_; }

  friend bool operator==(const Dist& a, const Dist& b) { return a.sq_ == b.sq_; }
  friend std::strong_ordering operator<=>(const Dist& a, const Dist& b) {
    int c = cmp(a.sq_, b.sq_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  Rational sq_{0};
};

using LabelSet = std::vector<std::string>;
using SqMatrix = std::vector<std::vector<Rational>>;

/// A finite semimetric space: labeled points and the symmetric matrix of
/// squared distances. Immutable once constructed; every instance satisfies
/// the semimetric axioms.
///
/// Alongside the rationals the space caches the dense rank of every
/// off-diagonal entry within D(X) (1 = smallest distance, 0 on the
/// diagonal). Everything order-theoretic (rigidity, Hasse levels, weak
/// similarity) only depends on these ranks.
class SemimetricSpace {
 public:
  /// Validates and builds. Throws Error with DuplicateLabel, NotSymmetric,
  /// BadDiagonal, NonpositiveOffDiagonal, NegativeEntry, DimensionMismatch
  /// or ParseError (empty label / empty space).
  SemimetricSpace(std::vector<std::string> labels, SqMatrix sq_matrix);

  std::size_t size() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }

  std::optional<std::size_t> find(std::string_view label) const;
  /// Throws Error{UnknownLabel}.
  std::size_t index_of(std::string_view label) const;
  /// Sorted, deduplicated indices of the given labels (space order).
  std::vector<std::size_t> indices_of(std::span<const std::string> labels) const;
  /// Labels of the given indices, in the given order.
  LabelSet labels_of(std::span<const std::size_t> indices) const;

  const Rational& sq(std::size_t i, std::size_t j) const { return sq_[i * size() + j]; }
  Dist dist(std::size_t i, std::size_t j) const { return Dist(sq(i, j)); }
  int rank(std::size_t i, std::size_t j) const { return rank_[i * size() + j]; }
  /// |D(X)|.
  int distinct_values() const noexcept { return distinct_values_; }

  SqMatrix sq_matrix() const;

  friend bool operator==(const SemimetricSpace& a, const SemimetricSpace& b) {
    return a.labels_ == b.labels_ && a.sq_ == b.sq_;
  }

 private:
  std::vector<std::string> labels_;
  std::vector<Rational> sq_;
  std::vector<int> rank_;
  int distinct_values_ = 0;
};

/// D(X) as a strictly increasing list.
struct DistanceSet {
  std::vector<Dist> values;
};

SemimetricSpace validate_space(std::vector<std::string> labels, SqMatrix sq_matrix);

/// Squared Euclidean distances between rational points. Throws
/// DimensionMismatch or CoincidentPoints(i,j).
SemimetricSpace from_rational_points(const std::vector<std::vector<Rational>>& coords,
                                     std::vector<std::string> labels);

/// Empty for a one-point space.
DistanceSet distance_set(const SemimetricSpace& space);

/// Restriction to the given labels; point order follows the parent space.
/// Throws UnknownLabel or EmptySubset.
SemimetricSpace subspace(const SemimetricSpace& space, std::span<const std::string> subset);
SemimetricSpace subspace(const SemimetricSpace& space, std::span<const std::size_t> indices);

/// Triangle inequality, decided on squares: sqrt(a) <= sqrt(b) + sqrt(c)
/// iff a <= b + c or (a - b - c)^2 <= 4bc.
bool is_metric(const SemimetricSpace& space);

/// Strong triangle inequality; max is monotone so squares decide it exactly.
bool is_ultrametric_space(const SemimetricSpace& space);

}  // namespace semimetric
