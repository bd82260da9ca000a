#include <algorithm>
#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "semimetric/error.hpp"
#include "semimetric/order_digraph.hpp"
#include "semimetric/order_types.hpp"
#include "semimetric/proximity.hpp"
#include "semimetric/rigidity.hpp"

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

// Plain mask loops, independent of for_each_disjoint_split.
bool ubpp_by_masks(const SemimetricSpace& s) {
  const std::size_t n = s.size();
  for (unsigned a = 1; a < (1u << n); ++a) {
    for (unsigned b = 1; b < (1u << n); ++b) {
      if (a & b) continue;
      Rational best = -1;
      int count = 0;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          if (!(a >> i & 1) || !(b >> j & 1)) continue;
          if (best < 0 || s.sq(i, j) < best) {
            best = s.sq(i, j);
            count = 1;
          } else if (s.sq(i, j) == best) {
            ++count;
          }
        }
      }
      if (count > 1) return false;
    }
  }
  return true;
}

const std::set<std::vector<std::size_t>> kAllowed{
    {1, 1, 1, 1, 1, 1}, {2, 1, 1, 1, 1}, {1, 2, 1, 1, 1}, {1, 1, 2, 1, 1}};

std::vector<std::size_t> sizes_of(const SemimetricSpace& s) {
  return level_signature(distance_hasse(s)).sizes;
}

}  // namespace

TEST_SUITE_BEGIN("rigidity");

TEST_CASE("is_strongly_rigid") {
  auto q = is_strongly_rigid(quad());
  CHECK_FALSE(q.holds);
  REQUIRE(q.witness);
  CHECK(q.witness->first == PairVertex{"z1", "z3"});
  CHECK(q.witness->second == PairVertex{"z2", "z4"});
  auto xs = is_strongly_rigid(xstar());
  CHECK_FALSE(xs.holds);
  CHECK(xs.witness->first == PairVertex{"a1", "b1"});
  CHECK(xs.witness->second == PairVertex{"a2", "b2"});
  CHECK(is_strongly_rigid(two_points()).holds);
  CHECK_FALSE(is_strongly_rigid(two_points()).witness);
  CHECK(is_strongly_rigid(triangle(1, 4, 9)).holds);
}

TEST_CASE("is_weakly_rigid") {
  for (const auto& s : {rect(), xstar(), quad(), di4good(), two_points()}) {
    auto r = is_weakly_rigid(s);
    CHECK(r.holds);
    CHECK_FALSE(r.witness);
  }
  // isosceles at a: d(a,b) = d(a,c)
  auto iso = is_weakly_rigid(triangle(1, 1, 4));
  CHECK_FALSE(iso.holds);
  REQUIRE(iso.witness);
  CHECK(*iso.witness == Triple{"b", "a", "c"});
  auto tied_far = space_of({"p", "q", "r", "s"}, {{"p", "q", 9}, {"p", "r", 9}, {"p", "s", 1},
                                                  {"q", "r", 4}, {"q", "s", 5}, {"r", "s", 6}});
  CHECK_FALSE(is_weakly_rigid(tied_far).holds);
}

TEST_CASE("is_ubpp_bruteforce") {
  CHECK(is_ubpp_bruteforce(quad()).holds);
  CHECK(is_ubpp_bruteforce(di4good()).holds);
  CHECK(is_ubpp_bruteforce(two_points()).holds);

  auto xs = is_ubpp_bruteforce(xstar());
  CHECK_FALSE(xs.holds);
  REQUIRE(xs.witness);
  CHECK(xs.witness->a == LabelSet{"a1", "b2"});
  CHECK(xs.witness->b == LabelSet{"b1", "a2"});
  CHECK(xs.witness->pairs == std::vector<LabelPair>{{"a1", "b1"}, {"b2", "a2"}});

  auto r = is_ubpp_bruteforce(rect());
  CHECK_FALSE(r.holds);
  CHECK(r.witness->a == LabelSet{"p", "q"});
  CHECK(r.witness->b == LabelSet{"l", "m"});
  CHECK(r.witness->pairs.size() == 2);

  CHECK(kind_of([] { is_ubpp_bruteforce(random_space(5, 0, 0), 4); }) == ErrorKind::TooLarge);
}

TEST_CASE("for_each_disjoint_split") {
  std::size_t count = 0;
  std::set<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> seen;
  for_each_disjoint_split(4, [&](auto a, auto b) {
    ++count;
    std::vector<std::size_t> va(a.begin(), a.end()), vb(b.begin(), b.end());
    CHECK(!va.empty());
    CHECK(!vb.empty());
    CHECK(va.front() < vb.front());
    seen.emplace(va, vb);
    return true;
  });
  CHECK(count == 25);
  CHECK(seen.size() == 25);
  std::size_t first_few = 0;
  for_each_disjoint_split(5, [&](auto, auto) { return ++first_few < 3; });
  CHECK(first_few == 3);
  std::size_t five = 0;
  for_each_disjoint_split(5, [&](auto, auto) { return ++five, true; });
  CHECK(five == 90);  // (3^5 - 2 * 2^5 + 1) / 2
}

TEST_CASE("is_ubpp_fourpoint") {
  auto r = is_ubpp_fourpoint(rect());
  CHECK_FALSE(r.holds);
  REQUIRE(r.witness);
  CHECK(r.witness->failed == FourPointCondition::ForbiddenSignature);
  CHECK(r.witness->signature == LevelSignature{{2, 2, 2}});

  auto xs = is_ubpp_fourpoint(xstar());
  CHECK_FALSE(xs.holds);
  CHECK(xs.witness->failed == FourPointCondition::SimilarToXStar);
  CHECK(xs.witness->similarity.has_value());

  CHECK(is_ubpp_fourpoint(di4good()).holds);
  CHECK(is_ubpp_fourpoint(quad()).holds);
  CHECK(is_ubpp_fourpoint(two_points()).holds);

  auto iso = is_ubpp_fourpoint(triangle(1, 1, 4));
  CHECK_FALSE(iso.holds);
  CHECK(iso.witness->failed == FourPointCondition::NotWeaklyRigid);
  CHECK(iso.witness->subset.size() == 3);
  CHECK(to_string(FourPointCondition::SimilarToXStar) == "weakly-similar-to-xstar");
}

TEST_CASE("classify") {
  auto q = classify(quad(), Method::Both);
  CHECK_FALSE(q.sr);
  CHECK(q.wr);
  CHECK(q.ubpp);
  CHECK(q.sr_witness);
  CHECK_FALSE(q.ubpp_witness);

  auto xs = classify(xstar(), Method::Both);
  CHECK_FALSE(xs.sr);
  CHECK(xs.wr);
  CHECK_FALSE(xs.ubpp);
  CHECK(xs.ubpp_witness);
  CHECK(xs.fourpoint_witness);

  auto two = classify(two_points(), Method::Both);
  CHECK(two.sr);
  CHECK(two.wr);
  CHECK(two.ubpp);

  auto oracle = classify(xstar(), Method::Oracle);
  CHECK(oracle.ubpp_witness);
  CHECK_FALSE(oracle.fourpoint_witness);
  auto four = classify(xstar(), Method::FourPoint);
  CHECK_FALSE(four.ubpp_witness);
  CHECK(four.fourpoint_witness);
  // no cap on the four-point route
  CHECK(classify(random_space(13, 1, 0), Method::FourPoint).sr);
  CHECK(kind_of([] { classify(random_space(13, 1, 0), Method::Both); }) == ErrorKind::TooLarge);

  CHECK(parse_method("fourpoint") == Method::FourPoint);
  CHECK(to_string(Method::Oracle) == "oracle");
  CHECK(kind_of([] { parse_method("fast"); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("small_space_equivalences") {
  CHECK(small_space_equivalences(triangle(1, 4, 9)) == std::array<bool, 4>{true, true, true, true});
  CHECK(small_space_equivalences(triangle(1, 1, 4)) == std::array<bool, 4>{false, false, false, false});
  CHECK(small_space_equivalences(two_points()) == std::array<bool, 4>{true, true, true, true});
  CHECK(small_space_equivalences(space_of({"a"}, {})) == std::array<bool, 4>{true, true, true, true});
  CHECK(kind_of([] { small_space_equivalences(rect()); }) == ErrorKind::WrongSize);
  std::size_t sr = 0;
  for (const auto& s : enumerate_order_type_spaces(3)) sr += small_space_equivalences(s)[0];
  CHECK(sr == 6);
}

TEST_CASE("best_approx_equivalence_report") {
  std::array<bool, 5> yes{true, true, true, true, true}, no{false, false, false, false, false};
  CHECK(best_approx_equivalence_report(rect()) == yes);
  CHECK(best_approx_equivalence_report(xstar()) == yes);
  CHECK(best_approx_equivalence_report(triangle(1, 1, 4)) == no);
  CHECK(best_approx_equivalence_report(two_points()) == yes);
  CHECK(kind_of([] { best_approx_equivalence_report(random_space(6, 0, 0), 5); }) == ErrorKind::TooLarge);
}

TEST_CASE("random_space") {
  auto one = random_space(1, 9, Rational(1, 2));
  CHECK(one.size() == 1);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    auto s = random_space(4, seed, 0);
    CHECK(s.distinct_values() == 6);
    CHECK(is_strongly_rigid(s).holds);
    auto tied = random_space(4, seed, 1);
    CHECK(tied.distinct_values() == 1);
    auto r = classify(tied, Method::Both);
    CHECK((!r.sr || r.ubpp));
    CHECK((!r.ubpp || r.wr));
  }
  CHECK(random_space(6, 42, Rational(1, 3)) == random_space(6, 42, Rational(1, 3)));
  CHECK_FALSE(random_space(6, 42, Rational(1, 3)) == random_space(6, 43, Rational(1, 3)));
  CHECK(random_space(3, 0, 0).labels() == LabelSet{"x1", "x2", "x3"});
  CHECK(kind_of([] { random_space(0, 0, 0); }) == ErrorKind::TooSmall);
  CHECK(kind_of([] { random_space(3, 0, Rational(5, 4)); }) == ErrorKind::InvalidArgument);
  CHECK(kind_of([] { random_space(3, 0, Rational(-1, 4)); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("every 4-point order type") {
  const auto spaces = enumerate_order_type_spaces(4);
  REQUIRE(spaces.size() == 4683);
  std::size_t sr = 0, wr = 0, ubpp = 0;
  for (const auto& s : spaces) {
    const auto r = classify(s, Method::Both);
    REQUIRE(r.ubpp == ubpp_by_masks(s));
    sr += r.sr;
    wr += r.wr;
    ubpp += r.ubpp;
    const auto sz = sizes_of(s);
    if (r.ubpp) {
      // unique minimal pair with a unique cover, at least five values
      CHECK(sz.size() >= 5);
      CHECK(sz.back() == 1);
      CHECK(sz[sz.size() - 2] == 1);
      CHECK(kAllowed.count(sz) == 1);
    }
    if (r.wr && kAllowed.count(sz) && sz != std::vector<std::size_t>{1, 1, 2, 1, 1}) CHECK(r.ubpp);
    if (r.wr && sz == std::vector<std::size_t>{1, 1, 2, 1, 1}) {
      CHECK(r.ubpp == !weakly_similar_to_xstar(s).has_value());
    }
  }
  CHECK(sr == 720);
  CHECK(wr == 1158);
  CHECK(ubpp == 912);
}

TEST_CASE("WR is needed: a tie at the top sharing a point") {
  // (2,1,1,1,1) but the two largest pairs meet at p
  auto s = space_of({"p", "q", "r", "s"}, {{"p", "q", 6}, {"p", "r", 6}, {"p", "s", 1},
                                          {"q", "r", 4}, {"q", "s", 5}, {"r", "s", 3}});
  CHECK(sizes_of(s) == std::vector<std::size_t>{2, 1, 1, 1, 1});
  auto r = classify(s, Method::Both);
  CHECK_FALSE(r.wr);
  CHECK_FALSE(r.ubpp);
}

TEST_CASE("random spaces: deciders agree, chain holds, UBPP is hereditary") {
  const Rational biases[] = {0, Rational(1, 4), Rational(1, 2), Rational(3, 4), 1};
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const std::size_t n = 2 + seed % 6;
    const auto s = random_space(n, seed, biases[seed % 5]);
    const auto r = classify(s, Method::Both);
    CHECK(r.ubpp == ubpp_by_masks(s));
    CHECK((!r.sr || r.ubpp));
    CHECK((!r.ubpp || r.wr));
    CHECK(r.sr == !r.sr_witness.has_value());
    CHECK(r.wr == !r.wr_witness.has_value());
    CHECK(r.ubpp == !r.ubpp_witness.has_value());
    if (n <= 6) {
      auto rep = best_approx_equivalence_report(s);
      CHECK(rep[4] == r.wr);
    }
    if (r.ubpp && n >= 3) {
      for (std::size_t drop = 0; drop < n; ++drop) {
        std::vector<std::size_t> keep;
        for (std::size_t i = 0; i < n; ++i) {
          if (i != drop) keep.push_back(i);
        }
        CHECK(classify(subspace(s, keep), Method::Both).ubpp);
      }
    }
  }
}

TEST_SUITE_END();
