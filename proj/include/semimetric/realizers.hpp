#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "semimetric/proximity.hpp"
#include "semimetric/space.hpp"

namespace semimetric {

struct CertificateCheck {
  std::string name;
  bool passed = false;
};

/// Verification record of a construction. Every check is recomputed by the
/// independent deciders (proximity, rigidity, space axioms) on the finished
/// space; nothing is taken from the construction itself.
struct Certificate {
  std::vector<CertificateCheck> checks;

  bool all_passed() const;
  /// Throws Error{UnknownName} if no check has this name.
  bool passed(std::string_view name) const;
};

struct RealizationResult {
  SemimetricSpace space;
  LabelSet part_a;
  LabelSet part_b;
  Certificate certificate;
};

/// Strongly rigid metric on A u B with the single edge {a0, b0} as its
/// proximinal graph. Distances (not squared) lie in [1, 2]:
///   d(a0, b0) = 1
///   d(a0, b), b != b0:     1 + k / (2|B|),          k = 1, 2, ...   in (1, 3/2)
///   d(a, b0), a != a0:     3/2 + (k - 1) / (4|A|),  k = 1, 2, ...   in [3/2, 7/4)
///   the other m pairs:     7/4 + k / (4(m + 1)),    k = 1..m        in (7/4, 2)
/// with k following declaration order (pairs row-major over A then B).
/// Checks: metric, strongly_rigid, graph_equal, unique_best_pair.
/// Throws WrongEdgeCount (0 or >= 2 edges) or InvalidBipartite.
RealizationResult realize_single_edge_sr(const BipartiteGraph& graph);

/// Weakly rigid metric whose proximinal graph is the given matching. Every
/// edge gets distance 1. With (a0*, b0*) the first edge and A0, B0 the
/// matched vertices, the remaining distances are spread evenly over
///   (a0*, b), b not in B0      (1, 6/5]
///   (a, b0*), a not in A0      (6/5, 7/5]
///   other cross pairs          (7/5, 8/5]
///   pairs inside A             (8/5, 9/5]
///   pairs inside B             (9/5, 2]
/// Checks: metric, weakly_rigid, graph_equal, max_degree_le_1.
/// Throws DegreeTooHigh, NoEdges or InvalidBipartite.
RealizationResult realize_matching_wr(const BipartiteGraph& graph);

/// Three-valued ultrametric: 1 on edges, 1/2 between same-part vertices of
/// one nontrivial component, 2 everywhere else. Requires the positive-degree
/// part of the graph to be a disjoint union of complete bipartite graphs.
/// Checks: ultrametric, graph_equal.
/// Throws NotComponentwiseCompleteBipartite (names a missing cross pair),
/// NoEdges or InvalidBipartite.
RealizationResult realize_ultrametric(const BipartiteGraph& graph);

/// Outcome of testing both sides of the star/nearest-point conjecture on one
/// finite graph.
struct ConjectureVerdict {
  /// Every component (isolated vertices included) is a star centred in A,
  /// and every b has degree 1.
  bool stars_literal = false;
  /// Same, with isolated A-vertices ignored.
  bool stars_positive_part = false;
  /// A weakly rigid space with Gamma(A) equal to the graph was constructed
  /// and verified.
  bool realizable = false;
  std::optional<SemimetricSpace> witness;
};

/// Builds a strongly rigid metric with bands (distances)
///   edges (1, 11/10), other cross pairs (6/5, 13/10),
///   inside A (7/5, 3/2), inside B (8/5, 17/10)
/// and keeps it iff its nearest-point graph equals the input. The attempt
/// fails exactly when some b has degree != 1, and no weakly rigid space can
/// do better there: a finite A always gives b a nearest point, and weak
/// rigidity forbids two.
ConjectureVerdict explore_conjecture(const BipartiteGraph& graph);

struct ConjectureScanRow {
  BipartiteGraph graph;
  ConjectureVerdict verdict;
};

struct ConjectureScan {
  std::vector<ConjectureScanRow> rows;
  std::size_t agree_literal = 0;
  std::size_t agree_positive_part = 0;
};

/// Part sizes up to these bounds.
inline constexpr std::size_t kConjectureScanCap = 4;

/// Runs explore_conjecture on every bipartite graph with 1 <= |A| <= max_a,
/// 1 <= |B| <= max_b, one per part-preserving isomorphism class.
/// Throws TooLarge above kConjectureScanCap, InvalidArgument for 0.
ConjectureScan scan_conjecture(std::size_t max_a, std::size_t max_b);

/// Representatives of the part-preserving isomorphism classes of bipartite
/// graphs on parts a1..a_na and b1..b_nb (each the lexicographically least
/// adjacency encoding of its class). Throws TooLarge above 4 x 4.
std::vector<BipartiteGraph> enumerate_bipartite_classes(std::size_t na, std::size_t nb);

}  // namespace semimetric
