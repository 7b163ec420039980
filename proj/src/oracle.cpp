#include "cfr/oracle.hpp"

#include <algorithm>
#include <limits>
#include <vector>

#include "cfr/errors.hpp"

namespace cfr {

namespace {

std::int64_t helper_subset_work(int others, int locality, int k) {
  // sum_{s<=locality} C(others, s) * s^k, saturating.
  constexpr auto cap = std::numeric_limits<std::int64_t>::max() / 4;
  std::int64_t total = 0;
  long double choose = 1;
  for (int s = 1; s <= std::min(locality, others); ++s) {
    choose = choose * (others - s + 1) / s;
    long double term = choose;
    for (int i = 0; i < k; ++i) term *= s;
    if (term + total > cap) return cap;
    total += static_cast<std::int64_t>(term);
  }
  return total;
}

}  // namespace

std::optional<std::int64_t> brute_force_repair_cost(const CfrArray& array, int erased,
                                                    int locality, std::int64_t max_work) {
  const int n = array.columns();
  const int k = array.rows();
  if (locality < 1) throw DomainError("locality must be >= 1");
  if (helper_subset_work(n - 1, locality, k) > max_work) {
    throw CapacityError("brute-force oracle instance too large");
  }
  const auto target = array.column(erased);
  std::vector<int> others;
  for (int j = 0; j < n; ++j) {
    if (j != erased) others.push_back(j);
  }

  std::optional<std::int64_t> best;
  std::vector<int> helpers;
  // rows[s][i]: row of target[i] in helper s, or -1.
  std::vector<std::vector<int>> rows;
  std::vector<int> choice(k);

  auto evaluate_assignments = [&]() {
    const int s = static_cast<int>(helpers.size());
    rows.assign(s, std::vector<int>(k, -1));
    for (int h = 0; h < s; ++h) {
      const auto col = array.column(helpers[h]);
      for (int i = 0; i < k; ++i) {
        for (int r = 0; r < k; ++r) {
          if (col[r] == target[i]) rows[h][i] = r;
        }
      }
    }
    // Odometer over choice[i] in [0, s).
    std::fill(choice.begin(), choice.end(), 0);
    while (true) {
      bool ok = true;
      for (int i = 0; i < k && ok; ++i) ok = rows[choice[i]][i] >= 0;
      if (ok) {
        std::int64_t cost = 0;
        for (int h = 0; h < s && ok; ++h) {
          int first = k, last = -1, count = 0;
          for (int i = 0; i < k; ++i) {
            if (choice[i] != h) continue;
            first = std::min(first, rows[h][i]);
            last = std::max(last, rows[h][i]);
            ++count;
          }
          if (count == 0) {
            ok = false;  // every chosen helper must send something
          } else {
            cost += last - first - (count - 1);
          }
        }
        if (ok && (!best || cost < *best)) best = cost;
      }
      int i = 0;
      while (i < k && ++choice[i] == s) choice[i++] = 0;
      if (i == k) break;
    }
  };

  // Helper subsets as increasing index tuples into `others`.
  std::vector<int> pick;
  auto recurse = [&](auto&& self, int start) -> void {
    if (!pick.empty()) {
      helpers.clear();
      for (int idx : pick) helpers.push_back(others[idx]);
      evaluate_assignments();
    }
    if (static_cast<int>(pick.size()) == locality) return;
    for (int i = start; i < static_cast<int>(others.size()); ++i) {
      pick.push_back(i);
      self(self, i + 1);
      pick.pop_back();
    }
  };
  recurse(recurse, 0);
  return best;
}

std::optional<std::int64_t> brute_force_array_cost(const CfrArray& array, int locality,
                                                   std::int64_t max_work) {
  std::int64_t worst = 0;
  for (int j = 0; j < array.columns(); ++j) {
    const auto c = brute_force_repair_cost(array, j, locality, max_work);
    if (!c) return std::nullopt;
    worst = std::max(worst, *c);
  }
  return worst;
}

}  // namespace cfr
