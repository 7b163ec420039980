#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cfr/rational.hpp"

namespace cfr {

struct AsymptoticRow {
  int t = 0;
  int k = 0;
  Rational xi{0};
};

/// The (t,k) pairs of the asymptotic expansion table.
std::vector<std::pair<int, int>> default_asymptotic_pairs();

std::vector<AsymptoticRow> asymptotic_table(const std::vector<std::pair<int, int>>& pairs);

std::string render_asymptotic_table(const std::vector<AsymptoticRow>& rows, bool csv);

/// Best known covering design sizes from the public repository that the
/// comparison table was computed with; nullopt when not listed.
std::optional<std::int64_t> published_design_size(int t, int k, int v);

/// File name of the (t,k,v) design inside a corpus directory.
std::string design_file_name(int t, int k, int v);

struct ComparisonCell {
  std::optional<std::int64_t> columns;
  std::optional<Rational> xi;
  std::optional<bool> zero_skip;  // set when verification ran
};

struct ComparisonRow {
  int v = 0;
  ComparisonCell duplicate;    // from the (t,k,v) design
  ComparisonCell combination;  // from the (t,k,v) and (t-1,k,v) designs
  ComparisonCell recursive;    // from the (t,k,v/q) design
};

struct ComparisonOptions {
  int t = 5;
  int k = 6;
  std::vector<int> v_values{12, 24};
  std::filesystem::path design_dir;
  bool verify = false;
  /// Number of sampled columns when verifying; 0 checks every column.
  int sample_columns = 0;
  std::uint64_t sample_seed = 1;
};

struct ComparisonTable {
  std::vector<ComparisonRow> rows;
  std::vector<std::string> footnotes;
};

/// Builds every construction for which input designs exist under
/// `design_dir` and measures its expansion factor at the resulting v.
ComparisonTable comparison_table(const ComparisonOptions& options);

std::string render_comparison_table(const ComparisonTable& table, bool exact, bool csv);

}  // namespace cfr
