#include "semimetric/proximity.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

#include "semimetric/error.hpp"

namespace semimetric {
namespace {

std::vector<std::size_t> nonempty_indices(const SemimetricSpace& space, const LabelSet& labels,
                                          const char* name) {
  if (labels.empty()) throw Error(ErrorKind::EmptyArgument, std::string(name) + " is empty");
  return space.indices_of(labels);
}

std::pair<std::vector<std::size_t>, std::vector<std::size_t>> disjoint_parts(
    const SemimetricSpace& space, const LabelSet& a, const LabelSet& b) {
  auto ia = nonempty_indices(space, a, "A");
  auto ib = nonempty_indices(space, b, "B");
  std::vector<std::size_t> common;
  std::set_intersection(ia.begin(), ia.end(), ib.begin(), ib.end(), std::back_inserter(common));
  if (!common.empty()) {
    throw Error(ErrorKind::NotDisjoint, "A and B share " + space.label(common.front()));
  }
  return {std::move(ia), std::move(ib)};
}

Dist min_over(const SemimetricSpace& space, const std::vector<std::size_t>& ia,
              const std::vector<std::size_t>& ib) {
  int best = -1;
  std::size_t bi = 0, bj = 0;
  for (auto i : ia) {
    for (auto j : ib) {
      int r = space.rank(i, j);
      if (best < 0 || r < best) {
        best = r;
        bi = i;
        bj = j;
      }
    }
  }
  return space.dist(bi, bj);
}

}  // namespace

BipartiteGraph BipartiteGraph::create(LabelSet part_a, LabelSet part_b,
                                      std::vector<LabelPair> edges) {
  if (part_a.empty() || part_b.empty()) {
    throw Error(ErrorKind::InvalidBipartite, "both parts must be nonempty");
  }
  std::unordered_map<std::string, std::pair<int, std::size_t>> where;
  for (std::size_t i = 0; i < part_a.size(); ++i) {
    if (!where.emplace(part_a[i], std::pair{0, i}).second) {
      throw Error(ErrorKind::InvalidBipartite, "duplicate vertex " + part_a[i]);
    }
  }
  for (std::size_t i = 0; i < part_b.size(); ++i) {
    if (!where.emplace(part_b[i], std::pair{1, i}).second) {
      throw Error(ErrorKind::InvalidBipartite, "vertex " + part_b[i] + " repeated or in both parts");
    }
  }
  std::vector<std::pair<std::size_t, std::size_t>> keyed;
  for (const auto& [u, v] : edges) {
    auto iu = where.find(u);
    auto iv = where.find(v);
    if (iu == where.end() || iv == where.end()) {
      throw Error(ErrorKind::InvalidBipartite, "edge {" + u + "," + v + "} uses an unknown vertex");
    }
    if (iu->second.first == iv->second.first) {
      throw Error(ErrorKind::InvalidBipartite, "edge {" + u + "," + v + "} lies inside one part");
    }
    if (iu->second.first == 0) {
      keyed.emplace_back(iu->second.second, iv->second.second);
    } else {
      keyed.emplace_back(iv->second.second, iu->second.second);
    }
  }
  std::sort(keyed.begin(), keyed.end());
  if (std::adjacent_find(keyed.begin(), keyed.end()) != keyed.end()) {
    throw Error(ErrorKind::InvalidBipartite, "duplicate edge");
  }
  BipartiteGraph g{std::move(part_a), std::move(part_b), {}};
  for (auto [i, j] : keyed) g.edges.emplace_back(g.part_a[i], g.part_b[j]);
  return g;
}

std::size_t BipartiteGraph::degree(std::string_view vertex) const {
  return static_cast<std::size_t>(std::count_if(edges.begin(), edges.end(), [&](const LabelPair& e) {
    return e.first == vertex || e.second == vertex;
  }));
}

std::size_t BipartiteGraph::max_degree() const {
  std::size_t best = 0;
  for (const auto& v : part_a) best = std::max(best, degree(v));
  for (const auto& v : part_b) best = std::max(best, degree(v));
  return best;
}

bool BipartiteGraph::has_edge(std::string_view a, std::string_view b) const {
  return std::any_of(edges.begin(), edges.end(),
                     [&](const LabelPair& e) { return e.first == a && e.second == b; });
}

bool operator==(const BipartiteGraph& g1, const BipartiteGraph& g2) {
  using S = std::set<std::string>;
  return S(g1.part_a.begin(), g1.part_a.end()) == S(g2.part_a.begin(), g2.part_a.end()) &&
         S(g1.part_b.begin(), g1.part_b.end()) == S(g2.part_b.begin(), g2.part_b.end()) &&
         std::set<LabelPair>(g1.edges.begin(), g1.edges.end()) ==
             std::set<LabelPair>(g2.edges.begin(), g2.edges.end());
}

Dist set_distance(const SemimetricSpace& space, const LabelSet& a, const LabelSet& b) {
  auto ia = nonempty_indices(space, a, "A");
  auto ib = nonempty_indices(space, b, "B");
  for (auto i : ia) {
    if (std::binary_search(ib.begin(), ib.end(), i)) return Dist();
  }
  return min_over(space, ia, ib);
}

LabelSet best_approximations(const SemimetricSpace& space, std::string_view x, const LabelSet& a) {
  const std::size_t ix = space.index_of(x);
  auto ia = nonempty_indices(space, a, "A");
  if (std::binary_search(ia.begin(), ia.end(), ix)) return {space.label(ix)};
  const std::vector<std::size_t> single{ix};
  const Dist best = min_over(space, single, ia);
  LabelSet out;
  for (auto i : ia) {
    if (space.dist(ix, i) == best) out.push_back(space.label(i));
  }
  return out;
}

std::vector<LabelPair> best_proximity_pairs(const SemimetricSpace& space, const LabelSet& a,
                                            const LabelSet& b) {
  auto [ia, ib] = disjoint_parts(space, a, b);
  const Dist best = min_over(space, ia, ib);
  std::vector<LabelPair> out;
  for (auto i : ia) {
    for (auto j : ib) {
      if (space.dist(i, j) == best) out.emplace_back(space.label(i), space.label(j));
    }
  }
  return out;
}

BipartiteGraph proximinal_graph(const SemimetricSpace& space, const LabelSet& a,
                                const LabelSet& b) {
  auto pairs = best_proximity_pairs(space, a, b);
  auto [ia, ib] = disjoint_parts(space, a, b);
  return BipartiteGraph{space.labels_of(ia), space.labels_of(ib), std::move(pairs)};
}

BipartiteGraph nearest_point_graph(const SemimetricSpace& space, const LabelSet& a) {
  auto ia = nonempty_indices(space, a, "A");
  if (ia.size() == space.size()) {
    throw Error(ErrorKind::NotProper, "A is the whole space, so B = X \\ A is empty");
  }
  std::vector<std::size_t> ib;
  for (std::size_t i = 0; i < space.size(); ++i) {
    if (!std::binary_search(ia.begin(), ia.end(), i)) ib.push_back(i);
  }
  // Collect (a-index, b-index) so the edge list is sorted like every other graph.
  std::vector<std::pair<std::size_t, std::size_t>> keyed;
  for (auto j : ib) {
    const std::vector<std::size_t> single{j};
    const Dist best = min_over(space, single, ia);
    for (auto i : ia) {
      if (space.dist(i, j) == best) keyed.emplace_back(i, j);
    }
  }
  std::sort(keyed.begin(), keyed.end());
  BipartiteGraph g{space.labels_of(ia), space.labels_of(ib), {}};
  for (auto [i, j] : keyed) g.edges.emplace_back(space.label(i), space.label(j));
  return g;
}

FrontierSets frontier_sets(const SemimetricSpace& space, const LabelSet& a, const LabelSet& b) {
  auto [ia, ib] = disjoint_parts(space, a, b);
  const Dist overall = min_over(space, ia, ib);
  FrontierSets out;
  for (auto i : ia) {
    const std::vector<std::size_t> single{i};
    if (min_over(space, single, ib) == overall) out.a0.push_back(space.label(i));
  }
  for (auto j : ib) {
    const std::vector<std::size_t> single{j};
    if (min_over(space, ia, single) == overall) out.b0.push_back(space.label(j));
  }
  return out;
}

}  // namespace semimetric
