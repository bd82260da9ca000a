#pragma once

#include <cstddef>
#include <vector>

#include "semimetric/space.hpp"

namespace semimetric {

/// All weak orders (ordered set partitions) of m items, each encoded as the
/// 1-based level of every item with levels 1..k all used. Lexicographic
/// order. m = 6 gives 4683 entries.
std::vector<std::vector<int>> enumerate_weak_orders(std::size_t m);

/// Space on x1..xn whose pairs (i < j, row-major) have squared distances
/// equal to their level in `levels`.
SemimetricSpace space_from_order_type(std::size_t n, const std::vector<int>& levels);

/// One space per distance order type on n labeled points.
std::vector<SemimetricSpace> enumerate_order_type_spaces(std::size_t n);

}  // namespace semimetric
