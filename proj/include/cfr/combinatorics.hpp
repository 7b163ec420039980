#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace cfr {

/// Binomial coefficient; 0 when k < 0 or k > n. Throws CapacityError on
/// int64 overflow.
std::int64_t binomial(std::int64_t n, std::int64_t k);

/// n! for 0 <= n <= 20.
std::int64_t factorial(int n);

/// ceil(a / b) for a >= 0, b > 0.
constexpr std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
  return (a + b - 1) / b;
}

/// The representative of a mod b in [1, b] (not [0, b-1]).
std::int64_t mod_bar(std::int64_t a, std::int64_t b);

/// Visits every `size`-subset of `items` in lexicographic order of
/// positions. The visitor returns false to stop early.
void for_each_combination(std::span<const int> items, int size,
                          const std::function<bool(std::span<const int>)>& visit);

/// Rank of a sorted subset of {0, ..., n-1} in the colexicographic order
/// (combinatorial number system).
std::int64_t colex_rank(std::span<const int> sorted_zero_based);

}  // namespace cfr
