#pragma once

#include <cstdint>
#include <optional>

#include "cfr/skipcost.hpp"

namespace cfr {

/// Reference repair-cost solver by direct enumeration: every helper set of
/// size <= locality and every way of sending each erased symbol through one
/// of the helpers (each helper sending at least one). Shares no code with
/// the partition/matching search. Throws CapacityError when the enumeration
/// would exceed `max_work` steps.
std::optional<std::int64_t> brute_force_repair_cost(const CfrArray& array, int erased,
                                                    int locality,
                                                    std::int64_t max_work = 200'000'000);

/// max over columns of brute_force_repair_cost; nullopt if any column is
/// infeasible.
std::optional<std::int64_t> brute_force_array_cost(const CfrArray& array, int locality,
                                                   std::int64_t max_work = 200'000'000);

}  // namespace cfr
