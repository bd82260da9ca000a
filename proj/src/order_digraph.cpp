#include "semimetric/order_digraph.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "semimetric/error.hpp"

namespace semimetric {
namespace {

std::string quoted(const std::string& name) {
  std::string out = "\"";
  for (char c : name) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::vector<std::vector<bool>> adjacency(const HasseDigraph& d) {
  const std::size_t n = d.vertices().size();
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (auto [u, v] : d.arcs()) adj[u][v] = true;
  return adj;
}

}  // namespace

std::string PairVertex::name() const { return "{" + first + "," + second + "}"; }

std::string LevelSignature::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(sizes[i]);
  }
  return out + ")";
}

HasseDigraph::HasseDigraph(std::vector<std::vector<std::string>> levels)
    : levels_(std::move(levels)) {
  if (levels_.empty()) throw Error(ErrorKind::TooSmall, "a Hasse digraph needs a vertex");
  std::vector<std::size_t> offsets;
  for (const auto& level : levels_) {
    if (level.empty()) throw Error(ErrorKind::TooSmall, "empty level");
    offsets.push_back(vertices_.size());
    vertices_.insert(vertices_.end(), level.begin(), level.end());
  }
  for (std::size_t l = 0; l + 1 < levels_.size(); ++l) {
    for (std::size_t u = 0; u < levels_[l].size(); ++u) {
      for (std::size_t v = 0; v < levels_[l + 1].size(); ++v) {
        arcs_.emplace_back(offsets[l] + u, offsets[l + 1] + v);
      }
    }
  }
}

std::vector<std::vector<PairVertex>> distance_levels(const SemimetricSpace& space) {
  const std::size_t n = space.size();
  if (n < 2) throw Error(ErrorKind::TooSmall, "Di_X needs at least two points");
  const int k = space.distinct_values();
  std::vector<std::vector<PairVertex>> levels(static_cast<std::size_t>(k));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      // rank k is the largest distance and goes first
      levels[static_cast<std::size_t>(k - space.rank(i, j))].push_back(
          PairVertex{space.label(i), space.label(j)});
    }
  }
  return levels;
}

HasseDigraph distance_hasse(const SemimetricSpace& space) {
  std::vector<std::vector<std::string>> names;
  for (const auto& level : distance_levels(space)) {
    auto& out = names.emplace_back();
    for (const auto& p : level) out.push_back(p.name());
  }
  return HasseDigraph(std::move(names));
}

LevelSignature level_signature(const HasseDigraph& digraph) {
  LevelSignature sig;
  for (const auto& level : digraph.levels()) sig.sizes.push_back(level.size());
  return sig;
}

HasseDigraph reference_digraph(std::string_view name) {
  static const std::map<std::string, std::vector<std::size_t>, std::less<>> shapes{
      {"Di0", {1, 1, 1}},
      {"Di1", {1, 1, 1, 1, 1, 1}},
      {"Di2", {2, 1, 1, 1, 1}},
      {"Di3", {1, 2, 1, 1, 1}},
      {"Di4", {1, 1, 2, 1, 1}},
  };
  auto it = shapes.find(name);
  if (it == shapes.end()) {
    throw Error(ErrorKind::UnknownName, std::string(name) + " (expected Di0..Di4)");
  }
  std::vector<std::vector<std::string>> levels;
  int next = 1;
  for (auto size : it->second) {
    auto& level = levels.emplace_back();
    for (std::size_t i = 0; i < size; ++i) level.push_back("v" + std::to_string(next++));
  }
  return HasseDigraph(std::move(levels));
}

bool digraphs_isomorphic(const HasseDigraph& d1, const HasseDigraph& d2) {
  return level_signature(d1) == level_signature(d2);
}

bool digraphs_isomorphic_bruteforce(const HasseDigraph& d1, const HasseDigraph& d2) {
  const std::size_t n = d1.vertices().size();
  if (n > kBruteForceIsoCap || d2.vertices().size() > kBruteForceIsoCap) {
    throw Error(ErrorKind::TooLarge, "brute-force isomorphism is capped at " +
                                         std::to_string(kBruteForceIsoCap) + " vertices");
  }
  if (n != d2.vertices().size() || d1.arcs().size() != d2.arcs().size()) return false;
  const auto adj1 = adjacency(d1);
  const auto adj2 = adjacency(d2);
  std::vector<std::size_t> image(n);
  std::vector<bool> used(n, false);

  std::function<bool(std::size_t)> extend = [&](std::size_t u) -> bool {
    if (u == n) return true;
    for (std::size_t v = 0; v < n; ++v) {
      if (used[v]) continue;
      bool ok = adj1[u][u] == adj2[v][v];
      for (std::size_t w = 0; ok && w < u; ++w) {
        ok = adj1[u][w] == adj2[v][image[w]] && adj1[w][u] == adj2[image[w]][v];
      }
      if (!ok) continue;
      used[v] = true;
      image[u] = v;
      if (extend(u + 1)) return true;
      used[v] = false;
    }
    return false;
  };
  return extend(0);
}

std::string export_dot(const HasseDigraph& digraph) {
  std::ostringstream out;
  out << "digraph Di {\n";
  out << "  rankdir=TB;\n";
  for (const auto& level : digraph.levels()) {
    out << "  { rank=same;";
    for (const auto& v : level) out << " " << quoted(v) << ";";
    out << " }\n";
  }
  for (auto [u, v] : digraph.arcs()) {
    out << "  " << quoted(digraph.vertices()[u]) << " -> " << quoted(digraph.vertices()[v])
        << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string export_dot(const BipartiteGraph& graph) {
  std::ostringstream out;
  out << "graph G {\n";
  out << "  subgraph cluster_A {\n    label=\"A\";\n    rank=same;\n";
  for (const auto& v : graph.part_a) out << "    " << quoted(v) << ";\n";
  out << "  }\n";
  out << "  subgraph cluster_B {\n    label=\"B\";\n    rank=same;\n";
  for (const auto& v : graph.part_b) out << "    " << quoted(v) << ";\n";
  out << "  }\n";
  for (const auto& [a, b] : graph.edges) out << "  " << quoted(a) << " -- " << quoted(b) << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace semimetric
