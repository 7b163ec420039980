#include "cfr/skipcost.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <limits>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>

#include "cfr/combinatorics.hpp"
#include "cfr/errors.hpp"
#include "cfr/matching.hpp"
#include "cfr/partitions.hpp"

namespace cfr {

CfrArray::CfrArray(int k, int v, std::vector<std::vector<int>> columns)
    : k_(k), v_(v), columns_(std::move(columns)) {
  if (k < 1 || v < k) throw DomainError("array needs 1 <= k <= v");
  for (std::size_t j = 0; j < columns_.size(); ++j) {
    const auto& col = columns_[j];
    const int line = static_cast<int>(j) + 1;
    if (static_cast<int>(col.size()) != k) {
      throw ArityError("column " + std::to_string(j + 1) + " has " +
                           std::to_string(col.size()) + " entries, expected " +
                           std::to_string(k),
                       line);
    }
    std::vector<int> sorted = col;
    std::sort(sorted.begin(), sorted.end());
    if (sorted.front() < 1 || sorted.back() > v) {
      throw RangeError("column " + std::to_string(j + 1) + " has a symbol outside [1," +
                           std::to_string(v) + "]",
                       line);
    }
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw ArityError("column " + std::to_string(j + 1) + " repeats a symbol", line);
    }
  }
}

int CfrArray::row_of(int j, int value) const {
  const auto& col = columns_.at(j);
  const auto it = std::find(col.begin(), col.end(), value);
  return it == col.end() ? -1 : static_cast<int>(it - col.begin());
}

std::vector<int> CfrArray::value_set(int j) const {
  std::vector<int> s = columns_.at(j);
  std::sort(s.begin(), s.end());
  return s;
}

CfrArray array_from_design(const CoveringDesign& design) {
  return CfrArray(design.params().k, design.params().v, design.blocks());
}

namespace {

bool content_line(const std::string& line) {
  const auto first = line.find_first_not_of(" \t\r");
  return first != std::string::npos && line[first] != '#';
}

std::vector<long long> read_ints(const std::string& line, int line_no) {
  std::istringstream tokens(line);
  std::vector<long long> out;
  std::string tok;
  while (tokens >> tok) {
    std::size_t used = 0;
    long long value = 0;
    try {
      value = std::stoll(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size()) throw ParseError("malformed token '" + tok + "'", line_no);
    out.push_back(value);
  }
  return out;
}

}  // namespace

CfrArray parse_array(std::istream& in) {
  std::string line;
  int line_no = 0;
  std::vector<long long> header;
  while (std::getline(in, line)) {
    ++line_no;
    if (!content_line(line)) continue;
    header = read_ints(line, line_no);
    break;
  }
  if (header.size() != 3) throw ParseError("expected header 'k N v'", line_no);
  const long long k = header[0], n = header[1], v = header[2];
  if (k < 1 || n < 0 || v < k) throw ParseError("header needs 1 <= k <= v and N >= 0", line_no);
  std::vector<std::vector<int>> columns(n, std::vector<int>(k));
  long long row = 0;
  while (row < k && std::getline(in, line)) {
    ++line_no;
    if (!content_line(line)) continue;
    const auto values = read_ints(line, line_no);
    if (static_cast<long long>(values.size()) != n) {
      throw ArityError("row has " + std::to_string(values.size()) + " entries, expected N=" +
                           std::to_string(n),
                       line_no);
    }
    for (long long j = 0; j < n; ++j) {
      if (values[j] < 1 || values[j] > v) {
        throw RangeError("symbol " + std::to_string(values[j]) + " outside [1," +
                             std::to_string(v) + "]",
                         line_no);
      }
      columns[j][row] = static_cast<int>(values[j]);
    }
    ++row;
  }
  if (row < k) throw ParseError("expected " + std::to_string(k) + " rows", line_no);
  return CfrArray(static_cast<int>(k), static_cast<int>(v), std::move(columns));
}

CfrArray parse_array(const std::string& text) {
  std::istringstream in(text);
  return parse_array(in);
}

CfrArray load_array(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open array file " + path.string());
  return parse_array(in);
}

void write_array(std::ostream& out, const CfrArray& array) {
  out << array.rows() << ' ' << array.columns() << ' ' << array.alphabet() << '\n';
  for (int i = 0; i < array.rows(); ++i) {
    for (int j = 0; j < array.columns(); ++j) {
      if (j) out << ' ';
      out << array.column(j)[i];
    }
    out << '\n';
  }
}

std::string serialize_array(const CfrArray& array) {
  std::ostringstream out;
  write_array(out, array);
  return out.str();
}

std::int64_t transmission_cost(std::span<const int> column, std::span<const int> values) {
  if (values.empty()) throw DomainError("transmission must be nonempty");
  int first = std::numeric_limits<int>::max();
  int last = -1;
  for (int value : values) {
    const auto it = std::find(column.begin(), column.end(), value);
    if (it == column.end()) {
      throw DomainError("symbol " + std::to_string(value) + " is not stored in the helper");
    }
    const int row = static_cast<int>(it - column.begin());
    first = std::min(first, row);
    last = std::max(last, row);
  }
  return last - first - (static_cast<std::int64_t>(values.size()) - 1);
}

namespace {

void check_search_size(const CfrArray& array, int locality) {
  if (locality < 1) throw DomainError("locality must be >= 1");
  if (array.rows() > kMaxSearchRows) {
    throw CapacityError("exact repair search supports k <= " + std::to_string(kMaxSearchRows) +
                        ", got k=" + std::to_string(array.rows()));
  }
}

// For each symbol, the columns holding it, ascending.
std::vector<std::vector<int>> symbol_columns(const CfrArray& array) {
  std::vector<std::vector<int>> out(array.alphabet() + 1);
  for (int j = 0; j < array.columns(); ++j) {
    for (int x : array.column(j)) out[x].push_back(j);
  }
  return out;
}

Transmission make_transmission(const CfrArray& array, int helper,
                               std::span<const int> values) {
  Transmission tr;
  tr.helper = helper;
  for (int x : values) tr.rows.push_back(array.row_of(helper, x));
  std::sort(tr.rows.begin(), tr.rows.end());
  for (int r : tr.rows) tr.values.push_back(array.column(helper)[r]);
  tr.cost = tr.rows.back() - tr.rows.front() - (static_cast<std::int64_t>(tr.rows.size()) - 1);
  return tr;
}

struct Candidate {
  std::int64_t cost;
  int column;
  auto operator<=>(const Candidate&) const = default;
};

// Solves one partition: parts get distinct helpers minimizing the summed
// cost; ties resolve to the lexicographically smallest helper vector.
// `candidates[p]` is already pruned and sorted by (cost, column).
std::optional<std::pair<std::int64_t, std::vector<int>>> best_assignment(
    const std::vector<std::vector<Candidate>>& candidates) {
  std::vector<int> cols;
  for (const auto& list : candidates) {
    for (const auto& c : list) cols.push_back(c.column);
  }
  std::sort(cols.begin(), cols.end());
  cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
  std::vector<std::vector<std::int64_t>> matrix(
      candidates.size(), std::vector<std::int64_t>(cols.size(), kForbidden));
  for (std::size_t p = 0; p < candidates.size(); ++p) {
    for (const auto& c : candidates[p]) {
      const auto at = std::lower_bound(cols.begin(), cols.end(), c.column) - cols.begin();
      matrix[p][at] = c.cost;
    }
  }
  auto assignment = lexmin_optimal_assignment(matrix);
  if (!assignment) return std::nullopt;
  std::vector<int> helpers;
  for (int idx : assignment->column_of_row) helpers.push_back(cols[idx]);
  return std::make_pair(assignment->total, std::move(helpers));
}

std::optional<RepairPlan> repair_search(const CfrArray& array,
                                        const std::vector<std::vector<int>>& holders,
                                        int erased, int locality) {
  const auto erased_col = array.column(erased);
  const int k = array.rows();
  const int max_parts = std::min(locality, k);

  std::optional<RepairPlan> best;
  std::vector<std::vector<int>> part_values;
  for (SetPartitions parts(k, max_parts); !parts.done(); parts.next()) {
    const auto blocks = parts.blocks();
    const std::size_t count = blocks.size();
    part_values.assign(count, {});
    std::vector<std::vector<Candidate>> candidates(count);
    bool feasible = true;
    for (std::size_t p = 0; p < count && feasible; ++p) {
      for (int idx : blocks[p]) part_values[p].push_back(erased_col[idx]);
      // Scan the columns of the rarest symbol of the part.
      const auto& rarest = *std::min_element(
          part_values[p].begin(), part_values[p].end(),
          [&](int a, int b) { return holders[a].size() < holders[b].size(); });
      auto& list = candidates[p];
      for (int h : holders[rarest]) {
        if (h == erased) continue;
        const auto col = array.column(h);
        int first = k, last = -1;
        bool has_all = true;
        for (int x : part_values[p]) {
          const auto it = std::find(col.begin(), col.end(), x);
          if (it == col.end()) {
            has_all = false;
            break;
          }
          const int r = static_cast<int>(it - col.begin());
          first = std::min(first, r);
          last = std::max(last, r);
        }
        if (!has_all) continue;
        list.push_back({last - first - static_cast<std::int64_t>(part_values[p].size() - 1), h});
      }
      if (list.empty()) {
        feasible = false;
        break;
      }
      // A part never needs more than `count` cheapest candidates.
      std::sort(list.begin(), list.end());
      if (list.size() > count) list.resize(count);
    }
    if (!feasible) continue;
    auto solved = best_assignment(candidates);
    if (!solved) continue;
    if (!best || solved->first < best->total_cost) {
      RepairPlan plan;
      plan.erased = erased;
      plan.total_cost = solved->first;
      for (std::size_t p = 0; p < count; ++p) {
        plan.transmissions.push_back(make_transmission(array, solved->second[p], part_values[p]));
      }
      best = std::move(plan);
      if (best->total_cost == 0) break;
    }
  }
  return best;
}

}  // namespace

std::optional<RepairPlan> column_repair_cost(const CfrArray& array, int erased, int locality) {
  check_search_size(array, locality);
  if (erased < 0 || erased >= array.columns()) throw DomainError("erased column out of range");
  return repair_search(array, symbol_columns(array), erased, locality);
}

std::string check_plan(const CfrArray& array, const RepairPlan& plan, int locality) {
  std::set<int> helpers;
  std::vector<int> received;
  std::int64_t total = 0;
  for (const auto& tr : plan.transmissions) {
    if (tr.helper == plan.erased) return "erased column used as a helper";
    if (tr.helper < 0 || tr.helper >= array.columns()) return "helper out of range";
    if (!helpers.insert(tr.helper).second) return "helper used twice";
    if (tr.rows.empty()) return "empty transmission";
    if (!std::is_sorted(tr.rows.begin(), tr.rows.end()) ||
        std::adjacent_find(tr.rows.begin(), tr.rows.end()) != tr.rows.end()) {
      return "rows not strictly increasing";
    }
    for (std::size_t i = 0; i < tr.rows.size(); ++i) {
      if (tr.rows[i] < 0 || tr.rows[i] >= array.rows()) return "row out of range";
      if (array.column(tr.helper)[tr.rows[i]] != tr.values[i]) return "value/row mismatch";
    }
    if (transmission_cost(array.column(tr.helper), tr.values) != tr.cost) return "cost mismatch";
    total += tr.cost;
    received.insert(received.end(), tr.values.begin(), tr.values.end());
  }
  if (static_cast<int>(helpers.size()) > locality) return "too many helpers";
  if (total != plan.total_cost) return "total cost mismatch";
  std::sort(received.begin(), received.end());
  if (std::adjacent_find(received.begin(), received.end()) != received.end()) {
    return "symbol transmitted twice";
  }
  if (received != array.value_set(plan.erased)) return "transmissions do not cover the column";
  return {};
}

RunIndex::RunIndex(const CfrArray& array) : array_(&array) {
  std::vector<int> key;
  for (int j = 0; j < array.columns(); ++j) {
    const auto col = array.column(j);
    for (int start = 0; start < array.rows(); ++start) {
      key.clear();
      for (int end = start; end < array.rows(); ++end) {
        key.insert(std::upper_bound(key.begin(), key.end(), col[end]), col[end]);
        runs_[key].push_back(j);
      }
    }
  }
}

std::span<const int> RunIndex::columns_with_run(std::span<const int> sorted_values) const {
  const auto it = runs_.find(std::vector<int>(sorted_values.begin(), sorted_values.end()));
  if (it == runs_.end()) return {};
  return it->second;
}

std::optional<RepairPlan> RunIndex::zero_cost_plan(int erased, int locality) const {
  const auto& array = *array_;
  check_search_size(array, locality);
  const auto erased_col = array.column(erased);
  const int k = array.rows();
  std::vector<int> values;
  for (SetPartitions parts(k, std::min(locality, k)); !parts.done(); parts.next()) {
    const auto blocks = parts.blocks();
    const std::size_t count = blocks.size();
    std::vector<std::vector<Candidate>> candidates(count);
    std::vector<std::vector<int>> part_values(count);
    bool feasible = true;
    for (std::size_t p = 0; p < count && feasible; ++p) {
      for (int idx : blocks[p]) part_values[p].push_back(erased_col[idx]);
      values = part_values[p];
      std::sort(values.begin(), values.end());
      for (int h : columns_with_run(values)) {
        if (h == erased) continue;
        candidates[p].push_back({0, h});
        if (candidates[p].size() == count) break;
      }
      feasible = !candidates[p].empty();
    }
    if (!feasible) continue;
    auto solved = best_assignment(candidates);
    if (!solved) continue;
    RepairPlan plan;
    plan.erased = erased;
    for (std::size_t p = 0; p < count; ++p) {
      plan.transmissions.push_back(make_transmission(array, solved->second[p], part_values[p]));
    }
    return plan;
  }
  return std::nullopt;
}

ZeroSkipResult is_zero_skip(const CfrArray& array, int locality, bool stop_at_first_failure) {
  check_search_size(array, locality);
  const RunIndex index(array);
  ZeroSkipResult result;
  for (int j = 0; j < array.columns(); ++j) {
    if (auto plan = index.zero_cost_plan(j, locality)) {
      result.plans.push_back(std::move(*plan));
    } else {
      result.failing.push_back(j);
      if (stop_at_first_failure) break;
    }
  }
  result.zero_skip = result.failing.empty();
  return result;
}

ZeroSkipResult is_zero_skip_sampled(const CfrArray& array, int locality,
                                    std::span<const int> columns) {
  check_search_size(array, locality);
  const RunIndex index(array);
  ZeroSkipResult result;
  for (int j : columns) {
    if (auto plan = index.zero_cost_plan(j, locality)) {
      result.plans.push_back(std::move(*plan));
    } else {
      result.failing.push_back(j);
    }
  }
  result.zero_skip = result.failing.empty();
  return result;
}

ArrayCost array_skip_cost(const CfrArray& array, int locality) {
  check_search_size(array, locality);
  const auto holders = symbol_columns(array);
  ArrayCost out;
  std::int64_t worst = 0;
  bool infeasible = false;
  for (int j = 0; j < array.columns(); ++j) {
    auto plan = repair_search(array, holders, j, locality);
    if (plan) {
      worst = std::max(worst, plan->total_cost);
    } else {
      infeasible = true;
    }
    out.plans.push_back(std::move(plan));
  }
  if (!infeasible) out.cost = worst;
  return out;
}

ReplicationProfile replication_profile(const CfrArray& array) {
  ReplicationProfile profile;
  profile.counts.assign(array.alphabet(), 0);
  for (const auto& col : array.data()) {
    for (int x : col) ++profile.counts[x - 1];
  }
  const auto total = std::accumulate(profile.counts.begin(), profile.counts.end(), std::int64_t{0});
  if (total != static_cast<std::int64_t>(array.rows()) * array.columns()) {
    throw ConsistencyError("replication counts do not sum to k*N");
  }
  profile.rho = profile.counts.empty()
                    ? 0
                    : *std::min_element(profile.counts.begin(), profile.counts.end());
  return profile;
}

Rational expansion_factor(std::int64_t n_columns, const DesignParams& params) {
  params.validate();
  if (n_columns < 1) throw DomainError("expansion factor needs N >= 1");
  return Rational(n_columns) / min_blocks_bound(params);
}

int default_locality(int t, int k) {
  if (t < 2) throw DomainError("default locality needs t >= 2");
  return static_cast<int>(ceil_div(k, t - 1));
}

CodeReport make_report(const CfrArray& array, const DesignParams& params, int locality,
                       bool exact) {
  CodeReport report;
  report.params = params;
  report.n_columns = array.columns();
  const auto profile = replication_profile(array);
  report.rho = profile.rho;
  report.rho_profile = profile.counts;
  report.locality = locality;
  report.expansion = expansion_factor(array.columns(), params);
  if (exact) {
    auto cost = array_skip_cost(array, locality);
    report.skip_cost = cost.cost;
    report.plans = std::move(cost.plans);
  } else {
    const RunIndex index(array);
    bool zero = true;
    for (int j = 0; j < array.columns(); ++j) {
      auto plan = index.zero_cost_plan(j, locality);
      zero = zero && plan.has_value();
      report.plans.push_back(std::move(plan));
    }
    if (zero) report.skip_cost = 0;
  }
  return report;
}

namespace {

std::string join_values(const std::vector<int>& values) {
  std::string out = "{";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(values[i]);
  }
  return out + "}";
}

}  // namespace

std::string render_plan(const RepairPlan& plan) {
  std::string out;
  for (std::size_t i = 0; i < plan.transmissions.size(); ++i) {
    const auto& tr = plan.transmissions[i];
    if (i) out += ", ";
    out += join_values(tr.values) + " from column " + std::to_string(tr.helper + 1) +
           " (rows " + std::to_string(tr.rows.front() + 1) + "-" +
           std::to_string(tr.rows.back() + 1) + ", cost " + std::to_string(tr.cost) + ")";
  }
  return out;
}

std::string render_report(const CodeReport& report, bool with_plans) {
  std::ostringstream out;
  out << "code: (" << report.n_columns << ", " << report.params.k << ", " << report.rho
      << ")_" << report.params.v << "\n";
  out << "design: " << to_string(report.params) << "\n";
  out << "locality: " << report.locality << "\n";
  out << "skip cost: "
      << (report.skip_cost ? std::to_string(*report.skip_cost) : std::string("nonzero or infeasible"))
      << "\n";
  out << "expansion factor: " << format_decimal(report.expansion) << " ("
      << to_string(report.expansion) << ")\n";
  out << "replication:";
  for (std::size_t a = 0; a < report.rho_profile.size(); ++a) {
    out << ' ' << (a + 1) << ':' << report.rho_profile[a];
  }
  out << "\n";
  if (with_plans) {
    for (std::size_t j = 0; j < report.plans.size(); ++j) {
      out << "column " << (j + 1) << ": ";
      if (report.plans[j]) {
        out << "cost " << report.plans[j]->total_cost << ": " << render_plan(*report.plans[j]);
      } else {
        out << "no plan";
      }
      out << "\n";
    }
  }
  return out.str();
}

std::string render_report_csv(const CodeReport& report) {
  std::ostringstream out;
  out << "N,k,v,t,rho,locality,skip_cost,expansion_factor,expansion_exact\n";
  out << report.n_columns << ',' << report.params.k << ',' << report.params.v << ','
      << report.params.t << ',' << report.rho << ',' << report.locality << ','
      << (report.skip_cost ? std::to_string(*report.skip_cost) : std::string("NA")) << ','
      << format_decimal(report.expansion) << ',' << to_string(report.expansion) << "\n";
  return out.str();
}

}  // namespace cfr
