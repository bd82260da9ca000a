#include <algorithm>
#include <array>

#include "doctest.h"
#include "fixtures.hpp"
#include "semimetric/error.hpp"
#include "semimetric/order_digraph.hpp"
#include "semimetric/order_types.hpp"
#include "semimetric/proximity.hpp"
#include "semimetric/rigidity.hpp"
#include "semimetric/weak_similarity.hpp"

using namespace semimetric;
using namespace semimetric::testing;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an Error");
  return ErrorKind::InconsistencyDetected;
}

Bijection identity(const SemimetricSpace& s) {
  Bijection phi;
  for (const auto& l : s.labels()) phi.map.emplace_back(l, l);
  return phi;
}

Bijection zip(const LabelSet& from, const LabelSet& to) {
  Bijection phi;
  for (std::size_t i = 0; i < from.size(); ++i) phi.map.emplace_back(from[i], to[i]);
  return phi;
}

// X* with its points renamed: label xs[i] goes to perm[i].
SemimetricSpace relabel(const SemimetricSpace& s, const std::array<std::size_t, 4>& perm) {
  SqMatrix m(4, std::vector<Rational>(4, Rational(0)));
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) m[perm[i]][perm[j]] = s.sq(i, j);
  }
  return validate_space(s.labels(), std::move(m));
}

}  // namespace

TEST_SUITE_BEGIN("weak_similarity");

TEST_CASE("x_star fixture") {
  auto xs = x_star();
  CHECK(xs.labels() == LabelSet{"a1", "b1", "a2", "b2"});
  CHECK(xs.sq(xs.index_of("a1"), xs.index_of("b2")) == 1);
  CHECK(xs.sq(xs.index_of("a2"), xs.index_of("b1")) == 4);
  CHECK(xs.sq(xs.index_of("a1"), xs.index_of("b1")) == 9);
  CHECK(xs.sq(xs.index_of("a2"), xs.index_of("b2")) == 9);
  CHECK(xs.sq(xs.index_of("b1"), xs.index_of("b2")) == 16);
  CHECK(xs.sq(xs.index_of("a1"), xs.index_of("a2")) == 25);
  CHECK(xs.distinct_values() == 5);
  auto r = classify(xs, Method::Both);
  CHECK(r.wr);
  CHECK_FALSE(r.ubpp);
}

TEST_CASE("is_weak_similarity") {
  for (const auto& s : {rect(), quad(), xstar(), di4good(), two_points()}) {
    CHECK(is_weak_similarity(s, s, identity(s)));
  }
  CHECK(is_weak_similarity(xstar(), scaled(xstar(), 7), identity(xstar())));

  auto xs = xstar();
  auto d4 = di4good();
  std::vector<std::string> target = d4.labels();
  std::sort(target.begin(), target.end());
  int hits = 0, tried = 0;
  do {
    ++tried;
    hits += is_weak_similarity(xs, d4, zip(xs.labels(), target));
  } while (std::next_permutation(target.begin(), target.end()));
  CHECK(tried == 24);
  CHECK(hits == 0);

  // a monotone but non-linear value change is still weak
  auto bent = space_of({"a1", "b1", "a2", "b2"}, {{"a1", "b2", 2}, {"a2", "b1", 3}, {"a1", "b1", 10},
                                                  {"a2", "b2", 10}, {"b1", "b2", 11}, {"a1", "a2", 100}});
  CHECK(is_weak_similarity(xs, bent, identity(xs)));
  CHECK_FALSE(is_weak_similarity(xs, bent, zip(xs.labels(), {"b1", "a1", "a2", "b2"})));

  CHECK(kind_of([&] { is_weak_similarity(xs, two_points(), identity(xs)); }) == ErrorKind::SizeMismatch);
  CHECK(kind_of([&] { is_weak_similarity(xs, xs, zip(xs.labels(), {"a1", "a1", "a2", "b2"})); }) ==
        ErrorKind::NotABijection);
  CHECK(kind_of([&] { is_weak_similarity(xs, xs, zip(xs.labels(), {"a1", "zz", "a2", "b2"})); }) ==
        ErrorKind::NotABijection);
  CHECK(kind_of([&] { is_weak_similarity(xs, xs, zip({"a1", "b1", "a2"}, {"a1", "b1", "a2"})); }) ==
        ErrorKind::NotABijection);
}

TEST_CASE("find_weak_similarity") {
  auto v = find_weak_similarity(xstar(), scaled(xstar(), 7));
  CHECK(v.kind == SimilarityKind::Weak);
  REQUIRE(v.witness);
  CHECK(v.witness->map == identity(xstar()).map);
  REQUIRE(v.value_table.size() == 5);
  CHECK(v.value_table.front() == std::pair<Rational, Rational>(1, 7));
  CHECK(v.value_table.back() == std::pair<Rational, Rational>(25, 175));

  auto none = find_weak_similarity(rect(), xstar());
  CHECK(none.kind == SimilarityKind::None);
  CHECK_FALSE(none.witness);
  CHECK(find_weak_similarity(xstar(), di4good()).kind == SimilarityKind::None);
  CHECK(find_weak_similarity(xstar(), two_points()).kind == SimilarityKind::None);
  CHECK(kind_of([] {
          auto big = random_space(9, 3, 0);
          find_weak_similarity(big, big);
        }) == ErrorKind::TooLarge);
}

TEST_CASE("find_similarity") {
  for (const auto& s : {rect(), quad(), xstar()}) {
    auto v = find_similarity(s, s);
    CHECK(v.kind == SimilarityKind::Isometry);
    CHECK(v.ratio_sq == Rational(1));
    CHECK(v.witness->map == identity(s).map);
  }
  auto v = find_similarity(xstar(), scaled(xstar(), 4));
  CHECK(v.kind == SimilarityKind::Similarity);
  CHECK(v.ratio_sq == Rational(4));
  CHECK(find_similarity(scaled(xstar(), 4), xstar()).ratio_sq == Rational(1, 4));
  CHECK(find_similarity(quad(), rect()).kind == SimilarityKind::None);
  // weakly similar but not similar
  auto bent = space_of({"p", "q", "r"}, {{"p", "q", 1}, {"p", "r", 2}, {"q", "r", 5}});
  auto line = space_of({"u", "v", "w"}, {{"u", "v", 1}, {"u", "w", 3}, {"v", "w", 4}});
  CHECK(find_similarity(bent, line).kind == SimilarityKind::None);
  CHECK(find_weak_similarity(bent, line).kind == SimilarityKind::Weak);
}

TEST_CASE("weakly_similar_to_xstar") {
  auto w = weakly_similar_to_xstar(xstar());
  REQUIRE(w);
  CHECK(w->map == identity(xstar()).map);
  CHECK_FALSE(weakly_similar_to_xstar(di4good()));
  CHECK_FALSE(weakly_similar_to_xstar(quad()));
  CHECK_FALSE(weakly_similar_to_xstar(rect()));
  CHECK(weakly_similar_to_xstar(scaled(xstar(), Rational(1, 3))));
}

TEST_CASE("the eight tied-matching variants of X* are pairwise isometric") {
  // Relabelings of X* that keep the tied pairs on {a1,b1} and {a2,b2}.
  const auto xs = xstar();
  const auto a1 = xs.index_of("a1"), b1 = xs.index_of("b1"), a2 = xs.index_of("a2"), b2 = xs.index_of("b2");
  std::array<std::size_t, 4> perm{0, 1, 2, 3};
  std::vector<SemimetricSpace> variants;
  do {
    auto y = relabel(xs, perm);
    if (y.sq(a1, b1) == 9 && y.sq(a2, b2) == 9) variants.push_back(std::move(y));
  } while (std::next_permutation(perm.begin(), perm.end()));
  REQUIRE(variants.size() == 8);
  for (std::size_t i = 0; i < variants.size(); ++i) {
    for (std::size_t j = i + 1; j < variants.size(); ++j) CHECK_FALSE(variants[i] == variants[j]);
  }

  // The map built from the unique point seeing both the smallest and the
  // largest value, then its two partners, then the remaining point.
  auto anchors = [](const SemimetricSpace& y) {
    std::vector<std::array<std::size_t, 4>> out;
    for (std::size_t a = 0; a < 4; ++a) {
      std::optional<std::size_t> lo, hi;
      for (std::size_t x = 0; x < 4; ++x) {
        if (x == a) continue;
        if (y.sq(a, x) == 1) lo = x;
        if (y.sq(a, x) == 25) hi = x;
      }
      if (lo && hi) out.push_back({a, *lo, *hi, 6 - a - *lo - *hi});
    }
    return out;
  };
  for (const auto& y1 : variants) {
    REQUIRE(anchors(y1).size() == 1);
    for (const auto& y2 : variants) {
      auto k1 = anchors(y1).front(), k2 = anchors(y2).front();
      Bijection phi;
      for (std::size_t k = 0; k < 4; ++k) phi.map.emplace_back(y1.label(k1[k]), y2.label(k2[k]));
      std::sort(phi.map.begin(), phi.map.end());
      CHECK(is_weak_similarity(y1, y2, phi));
      for (std::size_t u = 0; u < 4; ++u) {
        for (std::size_t v = 0; v < 4; ++v) {
          CHECK(y1.sq(u, v) == y2.sq(y2.index_of(phi(y1.label(u))), y2.index_of(phi(y1.label(v)))));
        }
      }
      auto found = find_similarity(y1, y2);
      CHECK(found.kind == SimilarityKind::Isometry);
    }
    CHECK(weakly_similar_to_xstar(y1));
    CHECK_FALSE(classify(y1, Method::Both).ubpp);
  }
}

TEST_CASE("symmetry, witnesses and transport on 4-point order types") {
  const auto spaces = enumerate_order_type_spaces(4);
  REQUIRE(spaces.size() == 4683);
  // compare every order type with a few shuffled partners
  const LabelSet xs = spaces.front().labels();
  std::size_t checked = 0;
  for (std::size_t i = 0; i < spaces.size(); i += 37) {
    for (std::size_t j = 0; j < spaces.size(); j += 211) {
      const auto& s1 = spaces[i];
      const auto& s2 = spaces[j];
      auto fwd = find_weak_similarity(s1, s2);
      auto back = find_weak_similarity(s2, s1);
      REQUIRE(fwd.kind == back.kind);
      if (fwd.kind == SimilarityKind::None) continue;
      ++checked;
      const auto& phi = *fwd.witness;
      CHECK(is_weak_similarity(s1, s2, phi));
      CHECK(is_weak_similarity(s2, s1, phi.inverse()));
      CHECK(level_signature(distance_hasse(s1)) == level_signature(distance_hasse(s2)));
      for_each_disjoint_split(4, [&](auto a, auto b) {
        const auto la = s1.labels_of(a), lb = s1.labels_of(b);
        CHECK(apply(phi, proximinal_graph(s1, la, lb)) == proximinal_graph(s2, apply(phi, la), apply(phi, lb)));
        return true;
      });
      auto r1 = classify(s1, Method::Oracle), r2 = classify(s2, Method::Oracle);
      CHECK(r1.ubpp == r2.ubpp);
      CHECK(r1.wr == r2.wr);
    }
  }
  CHECK(checked > 0);
}

TEST_CASE("relabelled random spaces are found again") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const std::size_t n = 3 + seed % 4;
    const auto s = random_space(n, seed, Rational(seed % 5, 4));
    // reverse the point order and stretch values monotonically
    SqMatrix m(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i != j) m[n - 1 - i][n - 1 - j] = s.sq(i, j) * s.sq(i, j) + 1;
      }
    }
    const auto t = validate_space(s.labels(), std::move(m));
    auto v = find_weak_similarity(s, t);
    REQUIRE(v.kind == SimilarityKind::Weak);
    CHECK(is_weak_similarity(s, t, *v.witness));
    auto sim = find_similarity(s, t);
    if (sim.kind != SimilarityKind::None) CHECK(is_weak_similarity(s, t, *sim.witness));
  }
}

TEST_SUITE_END();
