#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "cfr/designs.hpp"
#include "cfr/skipcost.hpp"

namespace cfr {

/// SplitMix64 finalizer; used to derive independent substream seeds.
std::uint64_t mix_seed(std::uint64_t x);

/// Seed of substream `index` under `seed`.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

/// Uniform permutation of `values` driven by std::mt19937_64 seeded with
/// `seed`. Fisher-Yates with rejection sampling, so the result depends only
/// on the seed (not on the standard library's distributions).
std::vector<int> seeded_shuffle(std::vector<int> values, std::uint64_t seed);

/// Each column is a uniform arrangement of its block, drawn from substream
/// derive_seed(seed, column). Throws ParameterError on duplicate blocks.
CfrArray random_ordering(const CoveringDesign& design, std::uint64_t seed);

enum class SearchStrategy { kGlobalReshuffle, kLocalRepair };

struct SearchConfig {
  std::uint64_t seed = 0;
  std::int64_t max_trials = 1;
  SearchStrategy strategy = SearchStrategy::kGlobalReshuffle;
  int locality = 1;
};

struct TrialRecord {
  std::int64_t trial = 0;
  std::int64_t failing_columns = 0;
};

struct SearchOutcome {
  bool success = false;
  std::optional<CfrArray> array;  // set on success
  std::int64_t trials_used = 0;
  std::vector<int> failing_columns;  // of the last trial, when exhausted
  std::vector<TrialRecord> log;
};

/// Looks for a within-column ordering of the design's blocks with zero skip
/// cost at the configured locality.
///
/// kGlobalReshuffle draws trial i as random_ordering(design,
/// derive_seed(seed, i)). kLocalRepair starts from the same first draw;
/// each later round reshuffles the failing columns together with up to
/// `locality` random candidate helpers per failing column, then re-checks
/// the reshuffled columns, the failing ones, and every passing column whose
/// plan used a reshuffled helper.
SearchOutcome search_zero_skip(const CoveringDesign& design, const SearchConfig& config);

/// JSON lines, one object per trial: {"trial":i,"failing_columns":n}.
void write_trial_log(std::ostream& out, const SearchOutcome& outcome);

/// Consecutive chunks of the ascending block: q parts of sizes
/// t-1, ..., t-1, r. Requires t >= 2.
std::vector<std::vector<int>> greedy_partition(const Block& block, int t);

}  // namespace cfr
