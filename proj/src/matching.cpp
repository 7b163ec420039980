#include "cfr/matching.hpp"

#include <limits>

#include "cfr/errors.hpp"

namespace cfr {

std::optional<Assignment> min_cost_assignment(
    const std::vector<std::vector<std::int64_t>>& cost) {
  const int rows = static_cast<int>(cost.size());
  if (rows == 0) return Assignment{};
  const int cols = static_cast<int>(cost[0].size());
  if (rows > cols) return std::nullopt;

  // Forbidden entries get a penalty larger than any feasible total.
  std::int64_t penalty = 1;
  for (const auto& r : cost) {
    for (auto c : r) {
      if (c < kForbidden) throw DomainError("assignment costs must be nonnegative");
      if (c != kForbidden) penalty += c;
    }
  }
  auto at = [&](int i, int j) {
    const auto c = cost[i - 1][j - 1];
    return c == kForbidden ? penalty : c;
  };

  constexpr auto inf = std::numeric_limits<std::int64_t>::max() / 4;
  std::vector<std::int64_t> u(rows + 1, 0), v(cols + 1, 0);
  std::vector<int> p(cols + 1, 0), way(cols + 1, 0);
  for (int i = 1; i <= rows; ++i) {
    p[0] = i;
    int j0 = 0;
    std::vector<std::int64_t> minv(cols + 1, inf);
    std::vector<char> used(cols + 1, 0);
    do {
      used[j0] = 1;
      const int i0 = p[j0];
      std::int64_t delta = inf;
      int j1 = 0;
      for (int j = 1; j <= cols; ++j) {
        if (used[j]) continue;
        const auto cur = at(i0, j) - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= cols; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const int j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  Assignment out;
  out.column_of_row.assign(rows, -1);
  for (int j = 1; j <= cols; ++j) {
    if (p[j] != 0) out.column_of_row[p[j] - 1] = j - 1;
  }
  for (int i = 0; i < rows; ++i) {
    const auto c = cost[i][out.column_of_row[i]];
    if (c == kForbidden) return std::nullopt;
    out.total += c;
  }
  return out;
}

std::optional<Assignment> lexmin_optimal_assignment(
    const std::vector<std::vector<std::int64_t>>& cost) {
  auto best = min_cost_assignment(cost);
  if (!best) return std::nullopt;
  const int rows = static_cast<int>(cost.size());
  if (rows == 0) return best;
  const int cols = static_cast<int>(cost[0].size());

  // Fix rows one at a time to the smallest column that still admits an
  // optimal completion.
  auto work = cost;
  Assignment out;
  out.total = best->total;
  for (int i = 0; i < rows; ++i) {
    bool placed = false;
    for (int j = 0; j < cols && !placed; ++j) {
      if (work[i][j] == kForbidden) continue;
      auto trial = work;
      for (int jj = 0; jj < cols; ++jj) {
        if (jj != j) trial[i][jj] = kForbidden;
      }
      for (int ii = i + 1; ii < rows; ++ii) trial[ii][j] = kForbidden;
      // Rows before i are already pinned in `work`.
      auto sub = min_cost_assignment(trial);
      if (sub && sub->total == best->total) {
        work = std::move(trial);
        out.column_of_row.push_back(j);
        placed = true;
      }
    }
    if (!placed) throw ConsistencyError("lexicographic refinement lost optimality");
  }
  return out;
}

}  // namespace cfr
