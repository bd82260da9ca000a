#include "semimetric/order_types.hpp"

#include <algorithm>
#include <string>

#include "semimetric/error.hpp"

namespace semimetric {

std::vector<std::vector<int>> enumerate_weak_orders(std::size_t m) {
  std::vector<std::vector<int>> out;
  if (m == 0) {
    out.emplace_back();
    return out;
  }
  const int top = static_cast<int>(m);
  std::vector<int> levels(m, 1);
  while (true) {
    std::vector<bool> hit(m + 1, false);
    int k = 0;
    for (int l : levels) {
      hit[static_cast<std::size_t>(l)] = true;
      k = std::max(k, l);
    }
    if (std::all_of(hit.begin() + 1, hit.begin() + k + 1, [](bool b) { return b; })) {
      out.push_back(levels);
    }
    std::size_t pos = m;
    while (pos > 0) {
      --pos;
      if (++levels[pos] <= top) break;
      levels[pos] = 1;
      if (pos == 0) return out;
    }
  }
}

SemimetricSpace space_from_order_type(std::size_t n, const std::vector<int>& levels) {
  if (levels.size() != n * (n - 1) / 2) {
    throw Error(ErrorKind::DimensionMismatch, "need one level per pair");
  }
  SqMatrix m(n, std::vector<Rational>(n, Rational(0)));
  std::size_t p = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j, ++p) {
      m[i][j] = levels[p];
      m[j][i] = levels[p];
    }
  }
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1));
  return SemimetricSpace(std::move(names), std::move(m));
}

std::vector<SemimetricSpace> enumerate_order_type_spaces(std::size_t n) {
  std::vector<SemimetricSpace> out;
  for (const auto& levels : enumerate_weak_orders(n * (n - 1) / 2)) {
    out.push_back(space_from_order_type(n, levels));
  }
  return out;
}

}  // namespace semimetric
