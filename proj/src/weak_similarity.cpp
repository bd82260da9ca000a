#include "semimetric/weak_similarity.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "semimetric/error.hpp"
#include "semimetric/order_digraph.hpp"

namespace semimetric {
namespace {

using PairCheck = std::function<bool(std::size_t, std::size_t, std::size_t, std::size_t)>;

std::vector<std::vector<int>> rank_rows(const SemimetricSpace& s) {
  std::vector<std::vector<int>> rows(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = 0; j < s.size(); ++j) {
      if (i != j) rows[i].push_back(s.rank(i, j));
    }
    std::sort(rows[i].begin(), rows[i].end());
  }
  return rows;
}

// First bijection (in lexicographic order of targets) such that
// compatible(u, w, image(u), image(w)) holds for every assigned pair.
std::optional<std::vector<std::size_t>> search(const SemimetricSpace& s1,
                                               const SemimetricSpace& s2,
                                               const PairCheck& compatible) {
  const std::size_t n = s1.size();
  const auto rows1 = rank_rows(s1);
  const auto rows2 = rank_rows(s2);
  std::vector<std::size_t> image(n);
  std::vector<bool> used(n, false);
  std::function<bool(std::size_t)> extend = [&](std::size_t u) -> bool {
    if (u == n) return true;
    for (std::size_t v = 0; v < n; ++v) {
      if (used[v] || rows1[u] != rows2[v]) continue;
      bool ok = true;
      for (std::size_t w = 0; ok && w < u; ++w) ok = compatible(u, w, v, image[w]);
      if (!ok) continue;
      used[v] = true;
      image[u] = v;
      if (extend(u + 1)) return true;
      used[v] = false;
    }
    return false;
  };
  if (!extend(0)) return std::nullopt;
  return image;
}

void check_cap(const SemimetricSpace& s1, const SemimetricSpace& s2, std::size_t cap) {
  if (s1.size() > cap || s2.size() > cap) {
    throw Error(ErrorKind::TooLarge,
                "similarity search is capped at " + std::to_string(cap) + " points");
  }
}

Bijection to_bijection(const SemimetricSpace& s1, const SemimetricSpace& s2,
                       const std::vector<std::size_t>& image) {
  Bijection phi;
  for (std::size_t i = 0; i < image.size(); ++i) {
    phi.map.emplace_back(s1.label(i), s2.label(image[i]));
  }
  return phi;
}

std::vector<std::pair<Rational, Rational>> value_table(const SemimetricSpace& s1,
                                                       const SemimetricSpace& s2,
                                                       const std::vector<std::size_t>& image) {
  std::map<Rational, Rational> table;
  for (std::size_t i = 0; i < s1.size(); ++i) {
    for (std::size_t j = i + 1; j < s1.size(); ++j) table.emplace(s1.sq(i, j), s2.sq(image[i], image[j]));
  }
  return {table.begin(), table.end()};
}

}  // namespace

const std::string& Bijection::operator()(std::string_view source) const {
  for (const auto& [from, to] : map) {
    if (from == source) return to;
  }
  throw Error(ErrorKind::UnknownLabel, std::string(source) + " is not in the bijection's domain");
}

Bijection Bijection::inverse() const {
  Bijection inv;
  for (const auto& [from, to] : map) inv.map.emplace_back(to, from);
  return inv;
}

std::string_view to_string(SimilarityKind kind) {
  switch (kind) {
    case SimilarityKind::None: return "none";
    case SimilarityKind::Weak: return "weak";
    case SimilarityKind::Similarity: return "similarity";
    case SimilarityKind::Isometry: return "isometry";
  }
  return "none";
}

SemimetricSpace x_star() {
  // a1 b1 a2 b2, squared
  return validate_space({"a1", "b1", "a2", "b2"}, {
                                                      {0, 9, 25, 1},
                                                      {9, 0, 4, 16},
                                                      {25, 4, 0, 9},
                                                      {1, 16, 9, 0},
                                                  });
}

bool is_weak_similarity(const SemimetricSpace& s1, const SemimetricSpace& s2, const Bijection& phi) {
  const std::size_t n = s1.size();
  if (s2.size() != n) {
    throw Error(ErrorKind::SizeMismatch,
                "spaces of " + std::to_string(n) + " and " + std::to_string(s2.size()) + " points");
  }
  if (phi.map.size() != n) {
    throw Error(ErrorKind::NotABijection,
                "map has " + std::to_string(phi.map.size()) + " entries for " + std::to_string(n) + " points");
  }
  std::vector<std::size_t> image(n, n);
  std::set<std::size_t> targets;
  for (const auto& [from, to] : phi.map) {
    auto i = s1.find(from);
    auto j = s2.find(to);
    if (!i || !j) throw Error(ErrorKind::NotABijection, "unknown label in " + from + "->" + to);
    if (image[*i] != n) throw Error(ErrorKind::NotABijection, from + " mapped twice");
    if (!targets.insert(*j).second) throw Error(ErrorKind::NotABijection, to + " hit twice");
    image[*i] = *j;
  }
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  for (const auto& [x, y] : pairs) {
    const Dist d1 = s1.dist(x, y);
    const Dist d2 = s2.dist(image[x], image[y]);
    for (const auto& [u, v] : pairs) {
      const Dist e1 = s1.dist(u, v);
      const Dist e2 = s2.dist(image[u], image[v]);
      if ((d1 < e1) != (d2 < e2) || (d1 == e1) != (d2 == e2)) return false;
    }
  }
  return true;
}

SimilarityVerdict find_weak_similarity(const SemimetricSpace& s1, const SemimetricSpace& s2,
                                       std::size_t cap) {
  check_cap(s1, s2, cap);
  SimilarityVerdict verdict;
  if (s1.size() != s2.size() || s1.distinct_values() != s2.distinct_values()) return verdict;
  auto image = search(s1, s2, [&](std::size_t u, std::size_t w, std::size_t v, std::size_t x) {
    return s1.rank(u, w) == s2.rank(v, x);
  });
  if (!image) return verdict;
  Bijection phi = to_bijection(s1, s2, *image);
  if (!is_weak_similarity(s1, s2, phi)) {
    throw Error(ErrorKind::InconsistencyDetected,
                "rank-matched bijection fails the weak-similarity definition");
  }
  verdict.kind = SimilarityKind::Weak;
  verdict.value_table = value_table(s1, s2, *image);
  verdict.witness = std::move(phi);
  return verdict;
}

SimilarityVerdict find_similarity(const SemimetricSpace& s1, const SemimetricSpace& s2,
                                  std::size_t cap) {
  check_cap(s1, s2, cap);
  SimilarityVerdict verdict;
  if (s1.size() != s2.size() || s1.distinct_values() != s2.distinct_values()) return verdict;
  Rational ratio_sq = 1;
  if (s1.size() >= 2) {
    auto min_sq = [](const SemimetricSpace& s) { return distance_set(s).values.front().sq(); };
    ratio_sq = min_sq(s2) / min_sq(s1);
  }
  auto image = search(s1, s2, [&](std::size_t u, std::size_t w, std::size_t v, std::size_t x) {
    return s2.sq(v, x) == ratio_sq * s1.sq(u, w);
  });
  if (!image) return verdict;
  Bijection phi = to_bijection(s1, s2, *image);
  if (!is_weak_similarity(s1, s2, phi)) {
    throw Error(ErrorKind::InconsistencyDetected, "similarity that is not a weak similarity");
  }
  verdict.kind = ratio_sq == 1 ? SimilarityKind::Isometry : SimilarityKind::Similarity;
  verdict.ratio_sq = ratio_sq;
  verdict.value_table = value_table(s1, s2, *image);
  verdict.witness = std::move(phi);
  return verdict;
}

std::optional<Bijection> weakly_similar_to_xstar(const SemimetricSpace& space) {
  static const LevelSignature kXStarShape{{1, 1, 2, 1, 1}};
  if (space.size() != 4) return std::nullopt;
  if (level_signature(distance_hasse(space)) != kXStarShape) return std::nullopt;
  auto verdict = find_weak_similarity(space, x_star());
  return verdict.witness;
}

LabelSet apply(const Bijection& phi, const LabelSet& labels) {
  LabelSet out;
  out.reserve(labels.size());
  for (const auto& l : labels) out.push_back(phi(l));
  return out;
}

BipartiteGraph apply(const Bijection& phi, const BipartiteGraph& graph) {
  BipartiteGraph out{apply(phi, graph.part_a), apply(phi, graph.part_b), {}};
  for (const auto& [a, b] : graph.edges) out.edges.emplace_back(phi(a), phi(b));
  return out;
}

}  // namespace semimetric
