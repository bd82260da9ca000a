#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "semimetric/space.hpp"

namespace semimetric {

using LabelPair = std::pair<std::string, std::string>;

/// Bipartite graph with fixed parts. Each edge is stored oriented as
/// (a, b) with a in part_a and b in part_b, sorted by part positions.
struct BipartiteGraph {
  LabelSet part_a;
  LabelSet part_b;
  std::vector<LabelPair> edges;

  /// Checks the invariants, orients edges given in either order, drops
  /// nothing silently: duplicate edges or labels are errors.
  /// Throws Error{InvalidBipartite}.
  static BipartiteGraph create(LabelSet part_a, LabelSet part_b, std::vector<LabelPair> edges);

  std::size_t degree(std::string_view vertex) const;
  std::size_t max_degree() const;
  bool has_edge(std::string_view a, std::string_view b) const;
};

/// Parts and edges compared as sets.
bool operator==(const BipartiteGraph& g1, const BipartiteGraph& g2);

struct FrontierSets {
  LabelSet a0;
  LabelSet b0;
};

// Every nonempty subset of a finite space is proximinal (all minima are
// attained), so none of these functions checks proximinality.

/// dist(A, B) = min d(a, b). A and B may overlap.
Dist set_distance(const SemimetricSpace& space, const LabelSet& a, const LabelSet& b);

/// All a in A with d(x, a) = dist(x, A), in space order.
LabelSet best_approximations(const SemimetricSpace& space, std::string_view x, const LabelSet& a);

/// All (a, b) in A x B attaining dist(A, B), sorted by (a, b) space indices.
/// A and B must be disjoint.
std::vector<LabelPair> best_proximity_pairs(const SemimetricSpace& space, const LabelSet& a,
                                            const LabelSet& b);

/// G_X(A, B): edges are exactly the best proximity pairs.
BipartiteGraph proximinal_graph(const SemimetricSpace& space, const LabelSet& a,
                                const LabelSet& b);

/// Gamma_X(A) with B = X \ A: each b is joined to its best approximations in A.
BipartiteGraph nearest_point_graph(const SemimetricSpace& space, const LabelSet& a);

/// A0 = {a : dist(a, B) = dist(A, B)}, B0 = {b : dist(b, A) = dist(A, B)}.
FrontierSets frontier_sets(const SemimetricSpace& space, const LabelSet& a, const LabelSet& b);

}  // namespace semimetric
