#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "semimetric/proximity.hpp"
#include "semimetric/space.hpp"

namespace semimetric {

/// Point map between two spaces as (source label, target label) pairs.
struct Bijection {
  std::vector<LabelPair> map;

  const std::string& operator()(std::string_view source) const;
  Bijection inverse() const;
};

enum class SimilarityKind { None, Weak, Similarity, Isometry };

std::string_view to_string(SimilarityKind kind);

struct SimilarityVerdict {
  SimilarityKind kind = SimilarityKind::None;
  /// r^2 for Similarity / Isometry.
  std::optional<Rational> ratio_sq;
  std::optional<Bijection> witness;
  /// The strictly increasing value correspondence induced by the witness:
  /// (squared distance in space1, squared distance in space2), ascending.
  std::vector<std::pair<Rational, Rational>> value_table;
};

inline constexpr std::size_t kSimilaritySearchCap = 8;

/// (X*, rho*): a1 b1 a2 b2 with distances a1b2 = 1, a2b1 = 2, a1b1 = a2b2 = 3,
/// b1b2 = 4, a1a2 = 5. Weakly rigid but not UBPP.
SemimetricSpace x_star();

/// Checks that phi preserves strict order and equality between every two
/// pairs of points. For finite spaces this is the same as the existence of a
/// strictly increasing bijection between the distance sets.
/// Throws SizeMismatch or NotABijection.
bool is_weak_similarity(const SemimetricSpace& s1, const SemimetricSpace& s2, const Bijection& phi);

/// Backtracking over bijections in lexicographic label order, pruned by the
/// per-point multiset of distance ranks. Returns the first hit as a Weak
/// verdict. Throws Error{TooLarge} above `cap` points.
SimilarityVerdict find_weak_similarity(const SemimetricSpace& s1, const SemimetricSpace& s2,
                                       std::size_t cap = kSimilaritySearchCap);

/// Looks for d2(phi x, phi y)^2 = r^2 d1(x, y)^2 with one rational r^2.
/// Reports Isometry when r^2 = 1.
SimilarityVerdict find_similarity(const SemimetricSpace& s1, const SemimetricSpace& s2,
                                  std::size_t cap = kSimilaritySearchCap);

/// Weak similarity onto x_star(), only attempted when the space has four
/// points and level signature (1,1,2,1,1).
std::optional<Bijection> weakly_similar_to_xstar(const SemimetricSpace& space);

/// Image of a label set under phi.
LabelSet apply(const Bijection& phi, const LabelSet& labels);
BipartiteGraph apply(const Bijection& phi, const BipartiteGraph& graph);

}  // namespace semimetric
