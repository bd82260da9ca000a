#include "semimetric/realizers.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>

#include "semimetric/error.hpp"
#include "semimetric/rigidity.hpp"

namespace semimetric {
namespace {

// Points are part_a followed by part_b; a graph vertex is referred to by
// its index in that combined list.
struct Layout {
  BipartiteGraph graph;
  std::size_t na = 0;
  std::size_t nb = 0;
  std::vector<std::vector<bool>> adjacent;  // [a][b]

  explicit Layout(const BipartiteGraph& g)
      : graph(BipartiteGraph::create(g.part_a, g.part_b, g.edges)),
        na(graph.part_a.size()),
        nb(graph.part_b.size()),
        adjacent(na, std::vector<bool>(nb, false)) {
    for (const auto& [a, b] : graph.edges) {
      adjacent[index_in(graph.part_a, a)][index_in(graph.part_b, b)] = true;
    }
  }

  static std::size_t index_in(const LabelSet& part, const std::string& v) {
    return static_cast<std::size_t>(std::find(part.begin(), part.end(), v) - part.begin());
  }
  std::size_t size() const { return na + nb; }
  bool in_a(std::size_t v) const { return v < na; }
  std::size_t deg_a(std::size_t a) const {
    return static_cast<std::size_t>(std::count(adjacent[a].begin(), adjacent[a].end(), true));
  }
  std::size_t deg_b(std::size_t b) const {
    std::size_t d = 0;
    for (std::size_t a = 0; a < na; ++a) d += adjacent[a][b] ? 1 : 0;
    return d;
  }
  std::vector<std::string> labels() const {
    std::vector<std::string> out = graph.part_a;
    out.insert(out.end(), graph.part_b.begin(), graph.part_b.end());
    return out;
  }
};

// Symmetric distance assignment over the combined point list.
class DistanceTable {
 public:
  explicit DistanceTable(std::size_t n) : n_(n), d_(n, std::vector<std::optional<Rational>>(n)) {}

  void set(std::size_t i, std::size_t j, const Rational& length) {
    d_[i][j] = length;
    d_[j][i] = length;
  }
  bool has(std::size_t i, std::size_t j) const { return d_[i][j].has_value(); }

  SemimetricSpace build(std::vector<std::string> labels) const {
    SqMatrix m(n_, std::vector<Rational>(n_, Rational(0)));
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        if (i == j) continue;
        if (!d_[i][j]) throw Error(ErrorKind::InconsistencyDetected, "unassigned pair in construction");
        m[i][j] = Dist::from_length(*d_[i][j]).sq();
      }
    }
    return SemimetricSpace(std::move(labels), std::move(m));
  }

 private:
  std::size_t n_;
  std::vector<std::vector<std::optional<Rational>>> d_;
};

Rational q(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational frac(std::size_t num, std::size_t den) {
  return q(static_cast<long>(num), static_cast<long>(den));
}

// k-th of m evenly spaced values in (lo, hi]
Rational band_right_closed(const Rational& lo, const Rational& hi, std::size_t k, std::size_t m) {
  return lo + (hi - lo) * frac(k, m);
}

// k-th of m evenly spaced values in (lo, hi)
Rational band_open(const Rational& lo, const Rational& hi, std::size_t k, std::size_t m) {
  return lo + (hi - lo) * frac(k, m + 1);
}

std::vector<std::pair<std::size_t, std::size_t>> unassigned_pairs(const DistanceTable& t,
                                                                  std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!t.has(i, j)) out.emplace_back(i, j);
    }
  }
  return out;
}

const char* kInfiniteParts =
    "a proximinal graph without edges needs infinite parts; finite spaces always attain dist(A, B)";

}  // namespace

bool Certificate::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CertificateCheck& c) { return c.passed; });
}

bool Certificate::passed(std::string_view name) const {
  for (const auto& c : checks) {
    if (c.name == name) return c.passed;
  }
  throw Error(ErrorKind::UnknownName, "no certificate check " + std::string(name));
}

RealizationResult realize_single_edge_sr(const BipartiteGraph& graph) {
  const Layout g(graph);
  if (g.graph.edges.size() != 1) {
    throw Error(ErrorKind::WrongEdgeCount,
                std::to_string(g.graph.edges.size()) + " edges, exactly one required" +
                    (g.graph.edges.empty() ? std::string("; ") + kInfiniteParts : std::string()));
  }
  const std::size_t a0 = Layout::index_in(g.graph.part_a, g.graph.edges[0].first);
  const std::size_t b0 = Layout::index_in(g.graph.part_b, g.graph.edges[0].second);
  const std::size_t na = g.na, nb = g.nb;
  DistanceTable t(g.size());

  t.set(a0, na + b0, q(1));
  std::size_t k = 0;
  for (std::size_t b = 0; b < nb; ++b) {
    if (b == b0) continue;
    ++k;
    t.set(a0, na + b, q(1) + frac(k, 2 * nb));
  }
  k = 0;
  for (std::size_t a = 0; a < na; ++a) {
    if (a == a0) continue;
    ++k;
    t.set(a, na + b0, q(3, 2) + frac(k - 1, 4 * na));
  }
  const auto rest = unassigned_pairs(t, g.size());
  const std::size_t m = rest.size();
  for (std::size_t r = 0; r < m; ++r) {
    t.set(rest[r].first, rest[r].second,
          q(7, 4) + frac(r + 1, 4 * (m + 1)));
  }

  RealizationResult out{t.build(g.labels()), g.graph.part_a, g.graph.part_b, {}};
  const auto realized = proximinal_graph(out.space, out.part_a, out.part_b);
  const auto pairs = best_proximity_pairs(out.space, out.part_a, out.part_b);
  out.certificate.checks = {
      {"metric", is_metric(out.space)},
      {"strongly_rigid", is_strongly_rigid(out.space).holds},
      {"graph_equal", realized == g.graph},
      {"unique_best_pair", pairs.size() == 1 && pairs[0] == g.graph.edges[0]},
  };
  return out;
}

RealizationResult realize_matching_wr(const BipartiteGraph& graph) {
  const Layout g(graph);
  for (const auto& v : g.graph.part_a) {
    if (g.graph.degree(v) > 1) throw Error(ErrorKind::DegreeTooHigh, v);
  }
  for (const auto& v : g.graph.part_b) {
    if (g.graph.degree(v) > 1) throw Error(ErrorKind::DegreeTooHigh, v);
  }
  if (g.graph.edges.empty()) throw Error(ErrorKind::NoEdges, kInfiniteParts);

  const std::size_t na = g.na, nb = g.nb;
  const std::size_t a0 = Layout::index_in(g.graph.part_a, g.graph.edges[0].first);
  const std::size_t b0 = Layout::index_in(g.graph.part_b, g.graph.edges[0].second);
  DistanceTable t(g.size());

  std::vector<std::pair<std::size_t, std::size_t>> s10, s01, other_cross, inside_a, inside_b;
  for (std::size_t a = 0; a < na; ++a) {
    for (std::size_t b = 0; b < nb; ++b) {
      if (g.adjacent[a][b]) {
        t.set(a, na + b, q(1));
      } else if (a == a0 && g.deg_b(b) == 0) {
        s10.emplace_back(a, na + b);
      } else if (b == b0 && g.deg_a(a) == 0) {
        s01.emplace_back(a, na + b);
      } else {
        other_cross.emplace_back(a, na + b);
      }
    }
  }
  for (std::size_t i = 0; i < na; ++i) {
    for (std::size_t j = i + 1; j < na; ++j) inside_a.emplace_back(i, j);
  }
  for (std::size_t i = 0; i < nb; ++i) {
    for (std::size_t j = i + 1; j < nb; ++j) inside_b.emplace_back(na + i, na + j);
  }
  auto fill = [&](const auto& pairs, const Rational& lo, const Rational& hi) {
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      t.set(pairs[k].first, pairs[k].second, band_right_closed(lo, hi, k + 1, pairs.size()));
    }
  };
  fill(s10, q(1), q(6, 5));
  fill(s01, q(6, 5), q(7, 5));
  fill(other_cross, q(7, 5), q(8, 5));
  fill(inside_a, q(8, 5), q(9, 5));
  fill(inside_b, q(9, 5), q(2));

  RealizationResult out{t.build(g.labels()), g.graph.part_a, g.graph.part_b, {}};
  const auto realized = proximinal_graph(out.space, out.part_a, out.part_b);
  out.certificate.checks = {
      {"metric", is_metric(out.space)},
      {"weakly_rigid", is_weakly_rigid(out.space).holds},
      {"graph_equal", realized == g.graph},
      {"max_degree_le_1", realized.max_degree() <= 1},
  };
  return out;
}

RealizationResult realize_ultrametric(const BipartiteGraph& graph) {
  const Layout g(graph);
  if (g.graph.edges.empty()) throw Error(ErrorKind::NoEdges, kInfiniteParts);
  const std::size_t na = g.na, n = g.size();

  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  std::vector<bool> positive(n, false);
  for (std::size_t a = 0; a < na; ++a) {
    for (std::size_t b = 0; b < g.nb; ++b) {
      if (!g.adjacent[a][b]) continue;
      positive[a] = positive[na + b] = true;
      parent[find(a)] = find(na + b);
    }
  }
  auto same_component = [&](std::size_t u, std::size_t v) {
    return positive[u] && positive[v] && find(u) == find(v);
  };
  for (std::size_t a = 0; a < na; ++a) {
    for (std::size_t b = 0; b < g.nb; ++b) {
      if (same_component(a, na + b) && !g.adjacent[a][b]) {
        throw Error(ErrorKind::NotComponentwiseCompleteBipartite,
                    "missing cross pair {" + g.graph.part_a[a] + "," + g.graph.part_b[b] + "}");
      }
    }
  }

  DistanceTable t(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Rational d = q(2);
      if (same_component(i, j)) d = g.in_a(i) == g.in_a(j) ? q(1, 2) : q(1);
      t.set(i, j, d);
    }
  }

  RealizationResult out{t.build(g.labels()), g.graph.part_a, g.graph.part_b, {}};
  out.certificate.checks = {
      {"ultrametric", is_ultrametric_space(out.space)},
      {"graph_equal", proximinal_graph(out.space, out.part_a, out.part_b) == g.graph},
  };
  return out;
}

ConjectureVerdict explore_conjecture(const BipartiteGraph& graph) {
  const Layout g(graph);
  const std::size_t na = g.na, nb = g.nb;
  ConjectureVerdict verdict;

  // With every b of degree 1, each component is one a and its neighbours,
  // i.e. a star centred in A unless that a is isolated.
  bool all_b_degree_one = true;
  for (std::size_t b = 0; b < nb; ++b) all_b_degree_one = all_b_degree_one && g.deg_b(b) == 1;
  bool isolated_a = false;
  for (std::size_t a = 0; a < na; ++a) isolated_a = isolated_a || g.deg_a(a) == 0;
  verdict.stars_positive_part = all_b_degree_one;
  verdict.stars_literal = all_b_degree_one && !isolated_a;

  DistanceTable t(g.size());
  std::vector<std::pair<std::size_t, std::size_t>> edges, cross, inside_a, inside_b;
  for (std::size_t a = 0; a < na; ++a) {
    for (std::size_t b = 0; b < nb; ++b) (g.adjacent[a][b] ? edges : cross).emplace_back(a, na + b);
  }
  for (std::size_t i = 0; i < na; ++i) {
    for (std::size_t j = i + 1; j < na; ++j) inside_a.emplace_back(i, j);
  }
  for (std::size_t i = 0; i < nb; ++i) {
    for (std::size_t j = i + 1; j < nb; ++j) inside_b.emplace_back(na + i, na + j);
  }
  auto fill = [&](const auto& pairs, const Rational& lo, const Rational& hi) {
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      t.set(pairs[k].first, pairs[k].second, band_open(lo, hi, k + 1, pairs.size()));
    }
  };
  fill(edges, q(1), q(11, 10));
  fill(cross, q(6, 5), q(13, 10));
  fill(inside_a, q(7, 5), q(3, 2));
  fill(inside_b, q(8, 5), q(17, 10));

  SemimetricSpace space = t.build(g.labels());
  if (is_weakly_rigid(space).holds && nearest_point_graph(space, g.graph.part_a) == g.graph) {
    verdict.realizable = true;
    verdict.witness = std::move(space);
  }
  return verdict;
}

std::vector<BipartiteGraph> enumerate_bipartite_classes(std::size_t na, std::size_t nb) {
  if (na == 0 || nb == 0) throw Error(ErrorKind::InvalidArgument, "parts must be nonempty");
  if (na > 4 || nb > 4) throw Error(ErrorKind::TooLarge, "bipartite enumeration is capped at 4 x 4");

  auto permutations = [](std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> p(k);
    std::iota(p.begin(), p.end(), 0);
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
  };
  const auto row_perms = permutations(na);
  const auto col_perms = permutations(nb);
  // col_table[p][row] = row bits with columns permuted by p
  std::vector<std::vector<unsigned>> col_table(col_perms.size(), std::vector<unsigned>(1U << nb));
  for (std::size_t p = 0; p < col_perms.size(); ++p) {
    for (unsigned row = 0; row < (1U << nb); ++row) {
      unsigned out = 0;
      for (std::size_t c = 0; c < nb; ++c) {
        if (row >> c & 1U) out |= 1U << col_perms[p][c];
      }
      col_table[p][row] = out;
    }
  }

  const unsigned long total = 1UL << (na * nb);
  const unsigned row_mask = (1U << nb) - 1;
  std::vector<BipartiteGraph> out;
  for (unsigned long mask = 0; mask < total; ++mask) {
    bool least = true;
    for (const auto& rp : row_perms) {
      for (std::size_t cp = 0; cp < col_perms.size() && least; ++cp) {
        unsigned long image = 0;
        for (std::size_t r = 0; r < na; ++r) {
          const unsigned row = static_cast<unsigned>(mask >> (r * nb)) & row_mask;
          image |= static_cast<unsigned long>(col_table[cp][row]) << (rp[r] * nb);
        }
        least = image >= mask;
      }
      if (!least) break;
    }
    if (!least) continue;
    BipartiteGraph g;
    for (std::size_t r = 0; r < na; ++r) g.part_a.push_back("a" + std::to_string(r + 1));
    for (std::size_t c = 0; c < nb; ++c) g.part_b.push_back("b" + std::to_string(c + 1));
    for (std::size_t r = 0; r < na; ++r) {
      for (std::size_t c = 0; c < nb; ++c) {
        if (mask >> (r * nb + c) & 1UL) g.edges.emplace_back(g.part_a[r], g.part_b[c]);
      }
    }
    out.push_back(std::move(g));
  }
  return out;
}

ConjectureScan scan_conjecture(std::size_t max_a, std::size_t max_b) {
  if (max_a == 0 || max_b == 0) throw Error(ErrorKind::InvalidArgument, "bounds must be >= 1");
  if (max_a > kConjectureScanCap || max_b > kConjectureScanCap) {
    throw Error(ErrorKind::TooLarge, "conjecture scan is capped at " +
                                         std::to_string(kConjectureScanCap) + " per part");
  }
  ConjectureScan scan;
  for (std::size_t na = 1; na <= max_a; ++na) {
    for (std::size_t nb = 1; nb <= max_b; ++nb) {
      for (auto& g : enumerate_bipartite_classes(na, nb)) {
        ConjectureVerdict v = explore_conjecture(g);
        if (v.realizable == v.stars_literal) ++scan.agree_literal;
        if (v.realizable == v.stars_positive_part) ++scan.agree_positive_part;
        scan.rows.push_back({std::move(g), std::move(v)});
      }
    }
  }
  return scan;
}

}  // namespace semimetric
