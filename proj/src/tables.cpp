#include "cfr/tables.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <tuple>

#include "cfr/constructions.hpp"
#include "cfr/designs.hpp"
#include "cfr/errors.hpp"
#include "cfr/randomizer.hpp"
#include "cfr/skipcost.hpp"

namespace cfr {

std::vector<std::pair<int, int>> default_asymptotic_pairs() {
  return {{3, 4}, {4, 5}, {4, 6}, {5, 6}, {5, 7}, {5, 8}, {6, 7}, {6, 8}, {6, 9}, {6, 10}};
}

std::vector<AsymptoticRow> asymptotic_table(const std::vector<std::pair<int, int>>& pairs) {
  std::vector<AsymptoticRow> rows;
  for (const auto& [t, k] : pairs) rows.push_back({t, k, asymptotic_expansion(t, k)});
  return rows;
}

std::string render_asymptotic_table(const std::vector<AsymptoticRow>& rows, bool csv) {
  std::ostringstream out;
  if (csv) {
    out << "t,k,xi,xi_decimal\n";
    for (const auto& row : rows) {
      out << row.t << ',' << row.k << ',' << to_string(row.xi) << ','
          << format_decimal(row.xi) << '\n';
    }
    return out.str();
  }
  out << "(t,k)";
  for (const auto& row : rows) out << '\t' << '(' << row.t << ',' << row.k << ')';
  out << "\nxi";
  for (const auto& row : rows) out << '\t' << to_string(row.xi);
  out << '\n';
  return out.str();
}

std::optional<std::int64_t> published_design_size(int t, int k, int v) {
  static const std::map<std::tuple<int, int, int>, std::int64_t> sizes = {
      {{5, 6, 6}, 1},      {{5, 6, 7}, 6},      {{5, 6, 8}, 12},     {{5, 6, 9}, 30},
      {{5, 6, 10}, 50},    {{5, 6, 11}, 100},   {{5, 6, 12}, 132},   {{5, 6, 13}, 245},
      {{5, 6, 14}, 371},   {{5, 6, 16}, 808},   {{5, 6, 18}, 1530},  {{5, 6, 20}, 2800},
      {{5, 6, 22}, 4659},  {{5, 6, 24}, 7084},  {{5, 6, 26}, 11544}, {{4, 6, 12}, 40},
      {{4, 6, 14}, 80},    {{4, 6, 16}, 152},   {{4, 6, 18}, 236},   {{4, 6, 20}, 382},
      {{4, 6, 22}, 580},   {{4, 6, 24}, 784},   {{4, 6, 26}, 1152},
  };
  const auto it = sizes.find({t, k, v});
  if (it == sizes.end()) return std::nullopt;
  return it->second;
}

std::string design_file_name(int t, int k, int v) {
  return "c_" + std::to_string(v) + "_" + std::to_string(k) + "_" + std::to_string(t) + ".txt";
}

namespace {

class DesignCache {
 public:
  DesignCache(std::filesystem::path dir, std::vector<std::string>& notes)
      : dir_(std::move(dir)), notes_(notes) {}

  const CoveringDesign* get(int t, int k, int v) {
    const auto key = std::make_tuple(t, k, v);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second ? &*it->second : nullptr;
    const auto path = dir_ / design_file_name(t, k, v);
    std::optional<CoveringDesign> design;
    if (std::filesystem::exists(path)) {
      design = load_design(path, DesignParams{t, k, v});
      if (!verify_covering(*design).empty()) {
        throw Error(path.string() + " is not a covering design");
      }
      const auto published = published_design_size(t, k, v);
      if (published && *published != static_cast<std::int64_t>(design->size())) {
        notes_.push_back("(" + std::to_string(t) + "," + std::to_string(k) + "," +
                         std::to_string(v) + ") design has " + std::to_string(design->size()) +
                         " blocks; the best known size is " + std::to_string(*published));
      }
    }
    auto [it, inserted] = cache_.emplace(key, std::move(design));
    return it->second ? &*it->second : nullptr;
  }

 private:
  std::filesystem::path dir_;
  std::vector<std::string>& notes_;
  std::map<std::tuple<int, int, int>, std::optional<CoveringDesign>> cache_;
};

ComparisonCell measure(const CfrArray& array, const DesignParams& params, int locality,
                       const ComparisonOptions& options) {
  ComparisonCell cell;
  cell.columns = array.columns();
  cell.xi = expansion_factor(array.columns(), params);
  if (options.verify) {
    std::vector<int> cols(array.columns());
    std::iota(cols.begin(), cols.end(), 0);
    if (options.sample_columns > 0 && options.sample_columns < array.columns()) {
      cols = seeded_shuffle(std::move(cols), options.sample_seed);
      cols.resize(options.sample_columns);
      std::sort(cols.begin(), cols.end());
    }
    cell.zero_skip = is_zero_skip_sampled(array, locality, cols).zero_skip;
  }
  return cell;
}

}  // namespace

ComparisonTable comparison_table(const ComparisonOptions& options) {
  ComparisonTable table;
  DesignCache designs(options.design_dir, table.footnotes);
  const int t = options.t, k = options.k;
  const auto shape = recursive_params(t, k);
  const int ell = default_locality(t, k);
  for (int v : options.v_values) {
    ComparisonRow row;
    row.v = v;
    const DesignParams target{t, k, v};
    const auto* base = designs.get(t, k, v);
    if (base) {
      row.duplicate = measure(construct_duplicate(*base), target, 1, options);
      if (const auto* lower = designs.get(t - 1, k, v)) {
        row.combination = measure(construct_combination(*base, *lower), target, ell, options);
      }
    }
    if (v % shape.q == 0 && v / shape.q >= k) {
      if (const auto* small = designs.get(t, k, v / shape.q)) {
        const auto build = construct_recursive(*small);
        row.recursive = measure(build.array, target, ell, options);
      }
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

std::string render_comparison_table(const ComparisonTable& table, bool exact, bool csv) {
  auto cell_text = [&](const ComparisonCell& c) -> std::string {
    if (!c.xi) return "-";
    std::string s = exact ? to_string(*c.xi) : format_decimal(*c.xi);
    if (c.zero_skip && !*c.zero_skip) s += "*";
    return s;
  };
  std::ostringstream out;
  if (csv) {
    out << "v,construction,columns,xi,xi_exact,zero_skip\n";
    for (const auto& row : table.rows) {
      const std::pair<const char*, const ComparisonCell*> cells[] = {
          {"duplicate", &row.duplicate}, {"combination", &row.combination},
          {"recursive", &row.recursive}};
      for (const auto& [name, cell] : cells) {
        if (!cell->xi) continue;
        out << row.v << ',' << name << ',' << *cell->columns << ',' << format_decimal(*cell->xi)
            << ',' << to_string(*cell->xi) << ','
            << (cell->zero_skip ? (*cell->zero_skip ? "yes" : "no") : "unchecked") << '\n';
      }
    }
    return out.str();
  }
  out << "v";
  for (const auto& row : table.rows) out << '\t' << row.v;
  const std::pair<const char*, ComparisonCell ComparisonRow::*> lines[] = {
      {"Construction 1", &ComparisonRow::duplicate},
      {"Construction 2", &ComparisonRow::combination},
      {"Construction 3", &ComparisonRow::recursive}};
  for (const auto& [name, member] : lines) {
    out << '\n' << name;
    for (const auto& row : table.rows) out << '\t' << cell_text(row.*member);
  }
  out << '\n';
  for (const auto& note : table.footnotes) out << "note: " << note << '\n';
  return out.str();
}

}  // namespace cfr
