#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "semimetric/proximity.hpp"
#include "semimetric/space.hpp"

namespace semimetric {

/// An unordered pair of distinct points, i.e. an edge of K_|X|. `first`
/// precedes `second` in the space's point order.
struct PairVertex {
  std::string first;
  std::string second;

  /// "{p,q}"
  std::string name() const;
  friend bool operator==(const PairVertex&, const PairVertex&) = default;
};

/// Level cardinalities of a Hasse digraph, from the largest distance down.
struct LevelSignature {
  std::vector<std::size_t> sizes;

  std::string to_string() const;  // "(2,1,1,1,1)"
  friend bool operator==(const LevelSignature&, const LevelSignature&) = default;
};

/// Hasse diagram of a total preorder, stored by levels. Every vertex of level
/// i has an arc to every vertex of level i+1 and there are no other arcs.
class HasseDigraph {
 public:
  using Arc = std::pair<std::size_t, std::size_t>;

  /// Throws Error{TooSmall} if there are no levels or a level is empty.
  explicit HasseDigraph(std::vector<std::vector<std::string>> levels);

  const std::vector<std::vector<std::string>>& levels() const noexcept { return levels_; }
  /// Vertex names, level by level.
  const std::vector<std::string>& vertices() const noexcept { return vertices_; }
  /// Arcs as indices into vertices(), sorted.
  const std::vector<Arc>& arcs() const noexcept { return arcs_; }

 private:
  std::vector<std::vector<std::string>> levels_;
  std::vector<std::string> vertices_;
  std::vector<Arc> arcs_;
};

/// Di_X. Levels are the equal-distance classes of point pairs in descending
/// distance; pairs inside a level follow the space's point order.
/// Throws Error{TooSmall} for a one-point space.
HasseDigraph distance_hasse(const SemimetricSpace& space);

/// Pair vertices of distance_hasse(space), grouped by level.
std::vector<std::vector<PairVertex>> distance_levels(const SemimetricSpace& space);

LevelSignature level_signature(const HasseDigraph& digraph);

/// Di0 (3-chain), Di1 (6-chain), Di2 (2,1,1,1,1), Di3 (1,2,1,1,1),
/// Di4 (1,1,2,1,1), with vertices v1, v2, ... Throws Error{UnknownName}.
HasseDigraph reference_digraph(std::string_view name);

/// For level-complete digraphs the level signature is a complete invariant,
/// so isomorphism reduces to signature equality.
bool digraphs_isomorphic(const HasseDigraph& d1, const HasseDigraph& d2);

/// Permutation search over all vertex bijections using only vertices() and
/// arcs(). Test oracle for digraphs_isomorphic; throws Error{TooLarge} above
/// kBruteForceIsoCap vertices.
inline constexpr std::size_t kBruteForceIsoCap = 8;
bool digraphs_isomorphic_bruteforce(const HasseDigraph& d1, const HasseDigraph& d2);

std::string export_dot(const HasseDigraph& digraph);
std::string export_dot(const BipartiteGraph& graph);

}  // namespace semimetric
