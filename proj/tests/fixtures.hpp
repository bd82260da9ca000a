#pragma once

#include <initializer_list>
#include <string>
#include <tuple>
#include <vector>

#include "semimetric/space.hpp"
#include "semimetric/weak_similarity.hpp"

namespace semimetric::testing {

struct Entry {
  std::string a;
  std::string b;
  Rational sq;
};

/// Builds a space from its off-diagonal squared entries.
inline SemimetricSpace space_of(std::vector<std::string> labels, std::initializer_list<Entry> entries) {
  const std::size_t n = labels.size();
  SqMatrix m(n, std::vector<Rational>(n, Rational(0)));
  auto at = [&](const std::string& l) {
    for (std::size_t i = 0; i < n; ++i) {
      if (labels[i] == l) return i;
    }
    return n;
  };
  for (const auto& e : entries) {
    m[at(e.a)][at(e.b)] = e.sq;
    m[at(e.b)][at(e.a)] = e.sq;
  }
  return validate_space(std::move(labels), std::move(m));
}

/// Rectangle with sides 3, 4 and diagonal 5.
inline SemimetricSpace rect() {
  return space_of({"p", "q", "l", "m"}, {{"p", "q", 16}, {"p", "l", 25}, {"p", "m", 9},
                                         {"q", "l", 9}, {"q", "m", 25}, {"l", "m", 16}});
}

/// (5,0), (0,3), (-2,0), (0,-4): both diagonals 7.
inline SemimetricSpace quad() {
  return space_of({"z1", "z2", "z3", "z4"}, {{"z1", "z2", 34}, {"z1", "z3", 49}, {"z1", "z4", 41},
                                             {"z2", "z3", 13}, {"z2", "z4", 49}, {"z3", "z4", 20}});
}

inline SemimetricSpace xstar() { return x_star(); }

/// Weakly rigid, shaped like Di4, but not weakly similar to X*.
inline SemimetricSpace di4good() {
  return space_of({"w", "x", "y", "z"}, {{"w", "x", 25}, {"x", "y", 16}, {"y", "z", 4},
                                         {"z", "w", 1}, {"w", "y", 9}, {"x", "z", 9}});
}

inline SemimetricSpace two_points() { return space_of({"a", "b"}, {{"a", "b", 1}}); }

inline SemimetricSpace triangle(Rational ab, Rational ac, Rational bc) {
  return space_of({"a", "b", "c"}, {{"a", "b", ab}, {"a", "c", ac}, {"b", "c", bc}});
}

/// Every squared distance multiplied by `factor`.
inline SemimetricSpace scaled(const SemimetricSpace& s, const Rational& factor) {
  SqMatrix m = s.sq_matrix();
  for (auto& row : m) {
    for (auto& v : row) v *= factor;
  }
  return validate_space(s.labels(), std::move(m));
}

}  // namespace semimetric::testing
