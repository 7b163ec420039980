#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cfr/designs.hpp"
#include "cfr/rational.hpp"

namespace cfr {

/// Largest k the exact repair search accepts (Bell(12) partitions).
inline constexpr int kMaxSearchRows = 12;

/// A k x N storage array over [v]. Column j is an ordered arrangement of k
/// distinct symbols; the array is immutable once built.
///
/// Column and row indices are 0-based in this API; text output is 1-based.
class CfrArray {
 public:
  CfrArray() = default;

  /// Validates that every column has k distinct entries in [1, v].
  CfrArray(int k, int v, std::vector<std::vector<int>> columns);

  int rows() const noexcept { return k_; }
  int alphabet() const noexcept { return v_; }
  int columns() const noexcept { return static_cast<int>(columns_.size()); }
  std::span<const int> column(int j) const { return columns_.at(j); }
  const std::vector<std::vector<int>>& data() const noexcept { return columns_; }

  /// Row of `value` in column j, or -1.
  int row_of(int j, int value) const;
  /// The column's entries, ascending.
  std::vector<int> value_set(int j) const;

  friend bool operator==(const CfrArray&, const CfrArray&) = default;

 private:
  int k_ = 0;
  int v_ = 0;
  std::vector<std::vector<int>> columns_;
};

/// Columns are the design's blocks in order, each written ascending.
CfrArray array_from_design(const CoveringDesign& design);

/// Header line "k N v", then k rows of N integers. '#' comments allowed.
CfrArray parse_array(std::istream& in);
CfrArray parse_array(const std::string& text);
CfrArray load_array(const std::filesystem::path& path);
void write_array(std::ostream& out, const CfrArray& array);
std::string serialize_array(const CfrArray& array);

/// One helper's contribution: the rows it reads (ascending), their values
/// and the skipped-row count.
struct Transmission {
  int helper = 0;
  std::vector<int> rows;
  std::vector<int> values;
  std::int64_t cost = 0;
};

struct RepairPlan {
  int erased = 0;
  std::vector<Transmission> transmissions;
  std::int64_t total_cost = 0;
};

/// i_last - i_first - (count - 1) over the rows holding `values` in
/// `column`. Throws DomainError when a value is missing or `values` is
/// empty.
std::int64_t transmission_cost(std::span<const int> column, std::span<const int> values);

/// Exact minimum skip cost for repairing column `erased` with at most
/// `locality` helpers. Returns nullopt when no plan exists. Throws
/// CapacityError when k exceeds kMaxSearchRows.
std::optional<RepairPlan> column_repair_cost(const CfrArray& array, int erased, int locality);

/// Checks the structural invariants of a plan against the array (distinct
/// helpers, at most `locality`, disjoint transmissions that exactly cover
/// the erased column, consistent costs). Returns an error message or an
/// empty string.
std::string check_plan(const CfrArray& array, const RepairPlan& plan, int locality);

struct ZeroSkipResult {
  bool zero_skip = false;
  /// Zero-cost plans for the repairable columns, in column order.
  std::vector<RepairPlan> plans;
  /// Columns without a zero-cost plan.
  std::vector<int> failing;
  std::optional<int> first_failing() const {
    return failing.empty() ? std::nullopt : std::optional<int>(failing.front());
  }
};

/// Index of every contiguous run of every column, keyed by the run's value
/// set. Supports zero-cost repair queries.
class RunIndex {
 public:
  explicit RunIndex(const CfrArray& array);

  /// Columns in which `sorted_values` occupy consecutive rows, ascending.
  std::span<const int> columns_with_run(std::span<const int> sorted_values) const;

  /// Zero-cost plan for column `erased`, or nullopt.
  std::optional<RepairPlan> zero_cost_plan(int erased, int locality) const;

 private:
  const CfrArray* array_;
  std::map<std::vector<int>, std::vector<int>> runs_;
};

/// Whether every column has a zero-cost repair plan. With
/// `stop_at_first_failure` the scan ends at the first failing column.
ZeroSkipResult is_zero_skip(const CfrArray& array, int locality,
                            bool stop_at_first_failure = false);

/// Zero-skip check restricted to the given columns.
ZeroSkipResult is_zero_skip_sampled(const CfrArray& array, int locality,
                                    std::span<const int> columns);

struct ArrayCost {
  std::optional<std::int64_t> cost;  // nullopt when some column is infeasible
  std::vector<std::optional<RepairPlan>> plans;
};

/// max over columns of column_repair_cost.
ArrayCost array_skip_cost(const CfrArray& array, int locality);

struct ReplicationProfile {
  std::vector<std::int64_t> counts;  // counts[a-1] = columns containing a
  std::int64_t rho = 0;
};

ReplicationProfile replication_profile(const CfrArray& array);

/// N * C(k,t) / C(v,t).
Rational expansion_factor(std::int64_t n_columns, const DesignParams& params);

/// ceil(k / (t-1)); 1 when t = 1 is meaningless, so t >= 2 is required.
int default_locality(int t, int k);

/// Parameters and measured properties of a code.
struct CodeReport {
  DesignParams params;  // (t, k, v) of the underlying design
  std::int64_t n_columns = 0;
  std::int64_t rho = 0;
  std::vector<std::int64_t> rho_profile;
  int locality = 0;
  std::optional<std::int64_t> skip_cost;
  Rational expansion{0};
  std::vector<std::optional<RepairPlan>> plans;
};

/// Measures an array. With `exact` the full minimum-cost search runs on
/// every column; otherwise only the zero-cost check runs and skip_cost is
/// 0 or nullopt (unknown).
CodeReport make_report(const CfrArray& array, const DesignParams& params, int locality,
                       bool exact);

std::string render_plan(const RepairPlan& plan);
std::string render_report(const CodeReport& report, bool with_plans);
std::string render_report_csv(const CodeReport& report);

}  // namespace cfr
