#include "cfr/randomizer.hpp"

#include <algorithm>
#include <limits>
#include <ostream>
#include <random>
#include <set>

#include "cfr/combinatorics.hpp"
#include "cfr/errors.hpp"
#include "json.hpp"

namespace cfr {

std::uint64_t mix_seed(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  return mix_seed(mix_seed(seed) ^ mix_seed(index + 0x632be59bd9b4e019ULL));
}

namespace {

// Uniform integer in [0, bound) by rejection; bound >= 1.
std::uint64_t uniform_below(std::mt19937_64& engine, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = engine();
  } while (x >= limit);
  return x % bound;
}

}  // namespace

std::vector<int> seeded_shuffle(std::vector<int> values, std::uint64_t seed) {
  std::mt19937_64 engine(seed);
  for (std::size_t i = values.size(); i > 1; --i) {
    const auto j = uniform_below(engine, i);
    std::swap(values[i - 1], values[j]);
  }
  return values;
}

CfrArray random_ordering(const CoveringDesign& design, std::uint64_t seed) {
  if (design.has_duplicate_blocks()) {
    throw ParameterError("remove duplicate blocks before randomizing");
  }
  std::vector<std::vector<int>> columns;
  columns.reserve(design.size());
  for (std::size_t j = 0; j < design.size(); ++j) {
    columns.push_back(seeded_shuffle(design.blocks()[j], derive_seed(seed, j)));
  }
  return CfrArray(design.params().k, design.params().v, std::move(columns));
}

namespace {

SearchOutcome global_reshuffle(const CoveringDesign& design, const SearchConfig& config) {
  SearchOutcome outcome;
  for (std::int64_t trial = 0; trial < config.max_trials; ++trial) {
    auto array = random_ordering(design, derive_seed(config.seed, trial));
    auto check = is_zero_skip(array, config.locality);
    outcome.trials_used = trial + 1;
    outcome.log.push_back({trial, static_cast<std::int64_t>(check.failing.size())});
    if (check.zero_skip) {
      outcome.success = true;
      outcome.array = std::move(array);
      outcome.failing_columns.clear();
      return outcome;
    }
    outcome.failing_columns = std::move(check.failing);
  }
  return outcome;
}

SearchOutcome local_repair(const CoveringDesign& design, const SearchConfig& config) {
  SearchOutcome outcome;
  const std::uint64_t base = derive_seed(config.seed, 0);
  auto columns = random_ordering(design, base).data();
  const int k = design.params().k;
  const int v = design.params().v;
  const int n = static_cast<int>(columns.size());

  // Candidate helpers: columns sharing at least two symbols with column j.
  std::vector<std::vector<int>> holders(v + 1);
  for (int j = 0; j < n; ++j) {
    for (int x : design.blocks()[j]) holders[x].push_back(j);
  }
  auto neighbours = [&](int j) {
    std::vector<int> shared(n, 0);
    std::vector<int> out;
    for (int x : design.blocks()[j]) {
      for (int h : holders[x]) {
        if (h != j && ++shared[h] == 2) out.push_back(h);
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  };

  std::vector<std::optional<RepairPlan>> plans(n);
  std::vector<int> to_check(n);
  for (int j = 0; j < n; ++j) to_check[j] = j;

  for (std::int64_t round = 0; round < config.max_trials; ++round) {
    const CfrArray array(k, v, columns);
    const RunIndex index(array);
    for (int j : to_check) plans[j] = index.zero_cost_plan(j, config.locality);
    std::vector<int> failing;
    for (int j = 0; j < n; ++j) {
      if (!plans[j]) failing.push_back(j);
    }
    outcome.trials_used = round + 1;
    outcome.log.push_back({round, static_cast<std::int64_t>(failing.size())});
    if (failing.empty()) {
      outcome.success = true;
      outcome.array = array;
      outcome.failing_columns.clear();
      return outcome;
    }
    outcome.failing_columns = failing;
    if (round + 1 == config.max_trials) break;

    // Pick the columns to reshuffle this round.
    const std::uint64_t round_seed = derive_seed(config.seed, static_cast<std::uint64_t>(round) + 1);
    std::mt19937_64 picker(derive_seed(round_seed, ~0ULL));
    std::set<int> reshuffle(failing.begin(), failing.end());
    for (int j : failing) {
      auto near = neighbours(j);
      for (int c = 0; c < config.locality && !near.empty(); ++c) {
        const auto pick = uniform_below(picker, near.size());
        reshuffle.insert(near[pick]);
        near.erase(near.begin() + static_cast<std::ptrdiff_t>(pick));
      }
    }
    for (int j : reshuffle) {
      columns[j] = seeded_shuffle(design.blocks()[j], derive_seed(round_seed, j));
    }

    // Re-check failing and reshuffled columns, and passing columns whose
    // plan leaned on a reshuffled helper.
    std::set<int> next(reshuffle.begin(), reshuffle.end());
    for (int j = 0; j < n; ++j) {
      if (!plans[j]) continue;
      for (const auto& tr : plans[j]->transmissions) {
        if (reshuffle.count(tr.helper)) {
          next.insert(j);
          break;
        }
      }
    }
    to_check.assign(next.begin(), next.end());
  }
  return outcome;
}

}  // namespace

SearchOutcome search_zero_skip(const CoveringDesign& design, const SearchConfig& config) {
  if (config.max_trials < 1) throw DomainError("max_trials must be >= 1");
  if (config.locality < 1) throw DomainError("locality must be >= 1");
  if (design.has_duplicate_blocks()) {
    throw ParameterError("remove duplicate blocks before searching");
  }
  return config.strategy == SearchStrategy::kGlobalReshuffle ? global_reshuffle(design, config)
                                                             : local_repair(design, config);
}

void write_trial_log(std::ostream& out, const SearchOutcome& outcome) {
  for (const auto& rec : outcome.log) {
    const nlohmann::ordered_json line = {{"trial", rec.trial},
                                         {"failing_columns", rec.failing_columns}};
    out << line.dump() << '\n';
  }
}

std::vector<std::vector<int>> greedy_partition(const Block& block, int t) {
  if (t < 2) throw DomainError("greedy partition needs t >= 2");
  std::vector<int> sorted = block;
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::vector<int>> parts;
  for (std::size_t i = 0; i < sorted.size(); i += t - 1) {
    const auto end = std::min(sorted.size(), i + static_cast<std::size_t>(t - 1));
    parts.emplace_back(sorted.begin() + static_cast<std::ptrdiff_t>(i),
                       sorted.begin() + static_cast<std::ptrdiff_t>(end));
  }
  return parts;
}

}  // namespace cfr
