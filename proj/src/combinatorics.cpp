#include "cfr/combinatorics.hpp"

#include <limits>
#include <string>

#include "cfr/errors.hpp"

namespace cfr {

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  __int128 result = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;
    if (result > std::numeric_limits<std::int64_t>::max()) {
      throw CapacityError("binomial(" + std::to_string(n) + ", " +
                          std::to_string(k) + ") overflows int64");
    }
  }
  return static_cast<std::int64_t>(result);
}

std::int64_t factorial(int n) {
  if (n < 0 || n > 20) throw DomainError("factorial argument out of [0, 20]");
  std::int64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

std::int64_t mod_bar(std::int64_t a, std::int64_t b) {
  if (a < 1 || b < 1) throw DomainError("mod_bar needs positive arguments");
  return (a - 1) % b + 1;
}

void for_each_combination(std::span<const int> items, int size,
                          const std::function<bool(std::span<const int>)>& visit) {
  const int n = static_cast<int>(items.size());
  if (size < 0 || size > n) return;
  std::vector<int> pos(size);
  std::vector<int> chosen(size);
  for (int i = 0; i < size; ++i) pos[i] = i;
  while (true) {
    for (int i = 0; i < size; ++i) chosen[i] = items[pos[i]];
    if (!visit(chosen)) return;
    int i = size - 1;
    while (i >= 0 && pos[i] == n - size + i) --i;
    if (i < 0) return;
    ++pos[i];
    for (int j = i + 1; j < size; ++j) pos[j] = pos[j - 1] + 1;
  }
}

std::int64_t colex_rank(std::span<const int> sorted_zero_based) {
  std::int64_t rank = 0;
  for (std::size_t i = 0; i < sorted_zero_based.size(); ++i) {
    rank += binomial(sorted_zero_based[i], static_cast<std::int64_t>(i) + 1);
  }
  return rank;
}

}  // namespace cfr
