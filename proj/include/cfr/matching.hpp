#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace cfr {

/// Marks a forbidden row/column pair in an assignment cost matrix.
inline constexpr std::int64_t kForbidden = -1;

struct Assignment {
  std::vector<int> column_of_row;
  std::int64_t total = 0;
};

/// Minimum-cost assignment of every row to a distinct column (Hungarian
/// method with potentials, O(rows^2 * cols)). Requires rows <= cols and
/// nonnegative costs; entries equal to kForbidden may not be used.
/// Returns nullopt when no complete assignment avoids forbidden entries.
std::optional<Assignment> min_cost_assignment(
    const std::vector<std::vector<std::int64_t>>& cost);

/// Among all minimum-cost assignments, the one whose column_of_row vector
/// is lexicographically smallest.
std::optional<Assignment> lexmin_optimal_assignment(
    const std::vector<std::vector<std::int64_t>>& cost);

}  // namespace cfr
