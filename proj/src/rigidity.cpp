#include "semimetric/rigidity.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "semimetric/error.hpp"

namespace semimetric {
namespace {

void check_cap(const SemimetricSpace& space, std::size_t cap) {
  if (space.size() > cap) {
    throw Error(ErrorKind::TooLarge, std::to_string(space.size()) + " points exceed the cap of " +
                                         std::to_string(cap));
  }
}

std::string dump(const SemimetricSpace& space) {
  std::ostringstream out;
  out << "points:";
  for (const auto& l : space.labels()) out << " " << l;
  out << "; sq_dists:";
  for (std::size_t i = 0; i < space.size(); ++i) {
    out << " [";
    for (std::size_t j = 0; j < space.size(); ++j) out << (j ? " " : "") << to_string(space.sq(i, j));
    out << "]";
  }
  return out.str();
}

[[noreturn]] void inconsistent(const std::string& what, const SemimetricSpace& space) {
  throw Error(ErrorKind::InconsistencyDetected, what + " for space " + dump(space));
}

const std::vector<LevelSignature>& allowed_four_point_signatures() {
  static const std::vector<LevelSignature> allowed{
      {{1, 1, 1, 1, 1, 1}},
      {{2, 1, 1, 1, 1}},
      {{1, 2, 1, 1, 1}},
      {{1, 1, 2, 1, 1}},
  };
  return allowed;
}

LabelSet labels(const SemimetricSpace& space, std::span<const std::size_t> idx) {
  return space.labels_of(idx);
}

}  // namespace

std::string_view to_string(FourPointCondition c) {
  switch (c) {
    case FourPointCondition::NotWeaklyRigid: return "not-weakly-rigid";
    case FourPointCondition::ForbiddenSignature: return "forbidden-signature";
    case FourPointCondition::SimilarToXStar: return "weakly-similar-to-xstar";
  }
  return "?";
}

std::string_view to_string(Method m) {
  switch (m) {
    case Method::Oracle: return "oracle";
    case Method::FourPoint: return "fourpoint";
    case Method::Both: return "both";
  }
  return "?";
}

Method parse_method(std::string_view text) {
  if (text == "oracle") return Method::Oracle;
  if (text == "fourpoint") return Method::FourPoint;
  if (text == "both") return Method::Both;
  throw Error(ErrorKind::InvalidArgument, "unknown method " + std::string(text));
}

void for_each_disjoint_split(
    std::size_t n,
    const std::function<bool(std::span<const std::size_t>, std::span<const std::size_t>)>& visit) {
  std::vector<int> digit(n, 0);
  std::vector<std::size_t> a, b;
  a.reserve(n);
  b.reserve(n);
  while (true) {
    // advance the odometer; the last point is the least significant digit
    std::size_t pos = n;
    while (pos > 0) {
      --pos;
      if (++digit[pos] < 3) break;
      digit[pos] = 0;
      if (pos == 0) return;
    }
    if (n == 0) return;
    a.clear();
    b.clear();
    for (std::size_t i = 0; i < n; ++i) {
      if (digit[i] == 1) a.push_back(i);
      if (digit[i] == 2) b.push_back(i);
    }
    if (a.empty() || b.empty() || b.front() < a.front()) continue;
    if (!visit(a, b)) return;
  }
}

SrResult is_strongly_rigid(const SemimetricSpace& space) {
  const std::size_t n = space.size();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    for (std::size_t q = p + 1; q < pairs.size(); ++q) {
      auto [i, j] = pairs[p];
      auto [k, l] = pairs[q];
      if (space.rank(i, j) == space.rank(k, l)) {
        return {false, std::pair{PairVertex{space.label(i), space.label(j)},
                                 PairVertex{space.label(k), space.label(l)}}};
      }
    }
  }
  return {};
}

WrResult is_weakly_rigid(const SemimetricSpace& space) {
  const std::size_t n = space.size();
  for (std::size_t apex = 0; apex < n; ++apex) {
    for (std::size_t x = 0; x < n; ++x) {
      if (x == apex) continue;
      for (std::size_t y = x + 1; y < n; ++y) {
        if (y == apex) continue;
        if (space.rank(apex, x) == space.rank(apex, y)) {
          return {false, Triple{space.label(x), space.label(apex), space.label(y)}};
        }
      }
    }
  }
  return {};
}

UbppResult is_ubpp_bruteforce(const SemimetricSpace& space, std::size_t cap) {
  check_cap(space, cap);
  UbppResult result;
  for_each_disjoint_split(space.size(), [&](auto a, auto b) {
    int best = 0;
    std::vector<std::pair<std::size_t, std::size_t>> attained;
    for (auto i : a) {
      for (auto j : b) {
        const int r = space.rank(i, j);
        if (best == 0 || r < best) {
          best = r;
          attained.assign(1, {i, j});
        } else if (r == best) {
          attained.emplace_back(i, j);
        }
      }
    }
    if (attained.size() <= 1) return true;
    SplitWitness w{labels(space, a), labels(space, b), {}};
    for (auto [i, j] : attained) w.pairs.emplace_back(space.label(i), space.label(j));
    result = {false, std::move(w)};
    return false;
  });
  return result;
}

FourPointResult is_ubpp_fourpoint(const SemimetricSpace& space) {
  if (auto wr = is_weakly_rigid(space); !wr.holds) {
    return {false, FourPointWitness{FourPointCondition::NotWeaklyRigid,
                                    LabelSet(wr.witness->begin(), wr.witness->end()),
                                    std::nullopt, std::nullopt}};
  }
  const std::size_t n = space.size();
  const auto& allowed = allowed_four_point_signatures();
  const LevelSignature& xstar_shape = allowed.back();
  std::array<std::size_t, 4> idx{};
  for (idx[0] = 0; idx[0] < n; ++idx[0]) {
    for (idx[1] = idx[0] + 1; idx[1] < n; ++idx[1]) {
      for (idx[2] = idx[1] + 1; idx[2] < n; ++idx[2]) {
        for (idx[3] = idx[2] + 1; idx[3] < n; ++idx[3]) {
          const SemimetricSpace y = subspace(space, std::span<const std::size_t>(idx));
          LevelSignature sig = level_signature(distance_hasse(y));
          if (std::find(allowed.begin(), allowed.end(), sig) == allowed.end()) {
            return {false, FourPointWitness{FourPointCondition::ForbiddenSignature, y.labels(),
                                            std::move(sig), std::nullopt}};
          }
          if (sig != xstar_shape) continue;
          if (auto phi = weakly_similar_to_xstar(y)) {
            return {false, FourPointWitness{FourPointCondition::SimilarToXStar, y.labels(),
                                            std::move(sig), std::move(phi)}};
          }
        }
      }
    }
  }
  return {};
}

ClassificationReport classify(const SemimetricSpace& space, Method method, std::size_t cap) {
  ClassificationReport report;
  report.method = method;
  if (method != Method::FourPoint) check_cap(space, cap);

  auto sr = is_strongly_rigid(space);
  report.sr = sr.holds;
  report.sr_witness = std::move(sr.witness);
  auto wr = is_weakly_rigid(space);
  report.wr = wr.holds;
  report.wr_witness = std::move(wr.witness);

  std::optional<bool> oracle, fourpoint;
  if (method != Method::FourPoint) {
    auto r = is_ubpp_bruteforce(space, cap);
    oracle = r.holds;
    report.ubpp_witness = std::move(r.witness);
  }
  if (method != Method::Oracle) {
    auto r = is_ubpp_fourpoint(space);
    fourpoint = r.holds;
    report.fourpoint_witness = std::move(r.witness);
  }
  if (oracle && fourpoint && *oracle != *fourpoint) {
    inconsistent(std::string("brute-force UBPP = ") + (*oracle ? "true" : "false") +
                     " but four-point criterion = " + (*fourpoint ? "true" : "false"),
                 space);
  }
  report.ubpp = oracle ? *oracle : *fourpoint;
  if ((report.sr && !report.ubpp) || (report.ubpp && !report.wr)) {
    inconsistent("SR => UBPP => WR chain broken", space);
  }
  return report;
}

std::array<bool, 4> small_space_equivalences(const SemimetricSpace& space) {
  if (space.size() > 3) {
    throw Error(ErrorKind::WrongSize, std::to_string(space.size()) + " points, at most 3 allowed");
  }
  std::array<bool, 4> s{};
  s[0] = is_strongly_rigid(space).holds;
  s[1] = is_weakly_rigid(space).holds;
  s[2] = is_ubpp_bruteforce(space).holds;
  s[3] = true;
  for_each_disjoint_split(space.size(), [&](auto a, auto b) {
    auto g = proximinal_graph(space, labels(space, a), labels(space, b));
    s[3] = g.edges.size() == 1;
    return s[3];
  });
  if (!std::all_of(s.begin(), s.end(), [&](bool v) { return v == s[0]; })) {
    inconsistent("small-space statements disagree", space);
  }
  return s;
}

std::array<bool, 5> best_approx_equivalence_report(const SemimetricSpace& space, std::size_t cap) {
  check_cap(space, cap);
  const std::size_t n = space.size();
  std::array<bool, 5> s{true, true, true, true, true};

  for_each_disjoint_split(n, [&](auto a, auto b) {
    const LabelSet la = labels(space, a);
    const LabelSet lb = labels(space, b);
    if (s[0] && proximinal_graph(space, la, lb).max_degree() > 1) s[0] = false;
    if (s[1]) {
      auto f = frontier_sets(space, la, lb);
      if (f.a0.size() != f.b0.size()) s[1] = false;
    }
    return s[0] || s[1];
  });

  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n) && s[2]; ++mask) {
    LabelSet subset;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1U) subset.push_back(space.label(i));
    }
    for (const auto& x : space.labels()) {
      if (best_approximations(space, x, subset).size() != 1) {
        s[2] = false;
        break;
      }
    }
  }

  // at most one nearest point, counted directly from the distances
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n) && s[3]; ++mask) {
    for (std::size_t x = 0; x < n && s[3]; ++x) {
      if (mask >> x & 1U) continue;  // x in Y is its own unique nearest point
      Dist best;
      int count = 0;
      for (std::size_t y = 0; y < n; ++y) {
        if (!(mask >> y & 1U)) continue;
        const Dist d = space.dist(x, y);
        if (count == 0 || d < best) {
          best = d;
          count = 1;
        } else if (d == best) {
          ++count;
        }
      }
      if (count > 1) s[3] = false;
    }
  }

  s[4] = is_weakly_rigid(space).holds;
  if (!std::all_of(s.begin(), s.end(), [&](bool v) { return v == s[4]; })) {
    inconsistent("best-approximation statements disagree", space);
  }
  return s;
}

SemimetricSpace random_space(std::size_t n, std::uint64_t seed, const Rational& tie_bias) {
  if (n == 0) throw Error(ErrorKind::TooSmall, "random_space needs n >= 1");
  if (sgn(tie_bias) < 0 || tie_bias > 1) {
    throw Error(ErrorKind::InvalidArgument, "tie_bias " + to_string(tie_bias) + " not in [0,1]");
  }
  // mt19937_64's output sequence is fixed by the standard; the reductions
  // below are plain modular arithmetic so results match on every platform.
  std::mt19937_64 rng(seed);
  const std::uint64_t bias_num = tie_bias.get_num().get_ui();
  const std::uint64_t bias_den = tie_bias.get_den().get_ui();
  const std::size_t pairs = n * (n - 1) / 2;
  const std::uint64_t max_num = 8 * std::max<std::size_t>(pairs, 1);

  std::vector<Rational> used;
  SqMatrix m(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Rational v;
      if (!used.empty() && rng() % bias_den < bias_num) {
        v = used[rng() % used.size()];
      } else {
        do {
          const std::uint64_t num = 1 + rng() % max_num;
          const std::uint64_t den = 1 + rng() % 4;
          v = Rational(mpz_class(std::to_string(num)), mpz_class(std::to_string(den)));
          v.canonicalize();
        } while (std::find(used.begin(), used.end(), v) != used.end());
        used.push_back(v);
      }
      m[i][j] = v;
      m[j][i] = v;
    }
  }
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1));
  return SemimetricSpace(std::move(names), std::move(m));
}

}  // namespace semimetric
