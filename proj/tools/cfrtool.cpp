// Command-line front end: design verification, code construction, skip-cost
// measurement, randomized ordering search and table reports.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "cfr/combinatorics.hpp"
#include "cfr/constructions.hpp"
#include "cfr/designs.hpp"
#include "cfr/errors.hpp"
#include "cfr/oracle.hpp"
#include "cfr/randomizer.hpp"
#include "cfr/skipcost.hpp"
#include "cfr/tables.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitExhausted = 2;
constexpr int kExitUsage = 64;
constexpr int kExitData = 65;

struct DesignArgs {
  std::string path;
  int t = 0, k = 0, v = 0;
};

void add_design_args(CLI::App* cmd, DesignArgs& d) {
  cmd->add_option("--design", d.path, "Covering design file (one block per line)")
      ->required()
      ->check(CLI::ExistingFile);
  cmd->add_option("--t", d.t, "Strength t")->required();
  cmd->add_option("--k", d.k, "Block size k")->required();
  cmd->add_option("--v", d.v, "Point count v")->required();
}

void write_file(const std::string& path, const cfr::CfrArray& array) {
  std::ofstream out(path);
  if (!out) throw cfr::Error("cannot write " + path);
  cfr::write_array(out, array);
}

int run_verify(const DesignArgs& d, bool csv) {
  const cfr::DesignParams params{d.t, d.k, d.v};
  const auto design = cfr::load_design(d.path, params);
  const auto missing = cfr::verify_covering(design);
  if (csv) {
    std::cout << "t,k,v,blocks,uncovered,min_blocks_bound\n"
              << d.t << ',' << d.k << ',' << d.v << ',' << design.size() << ','
              << missing.size() << ',' << cfr::to_string(cfr::min_blocks_bound(params)) << '\n';
    return missing.empty() ? kExitOk : kExitInvalid;
  }
  std::cout << "design " << cfr::to_string(params) << ", " << design.size() << " blocks\n";
  if (missing.empty()) {
    std::cout << "valid: every " << d.t << "-subset is covered\n";
  } else {
    std::cout << "invalid: " << missing.size() << " uncovered " << d.t << "-subsets\n";
    for (std::size_t i = 0; i < missing.size() && i < 10; ++i) {
      std::cout << "  uncovered:";
      for (int x : missing[i]) std::cout << ' ' << x;
      std::cout << '\n';
    }
  }
  for (int s = 1; s <= d.t; ++s) {
    std::cout << "r_" << s << " = " << cfr::to_string(cfr::replication_bound(params, s)) << '\n';
  }
  const auto bound = cfr::min_blocks_bound(params);
  std::cout << "min blocks bound: " << cfr::to_string(bound) << " (" << cfr::format_decimal(bound)
            << ")\n";
  std::cout << "size / bound: " << cfr::format_decimal(cfr::Rational(design.size()) / bound)
            << '\n';
  if (d.t >= 2) {
    const auto loc = cfr::is_properly_local(params);
    std::cout << "properly local: " << (loc.properly_local ? "yes" : "no") << " ("
              << loc.lhs << (loc.properly_local ? " >= " : " < ") << loc.q + 1 << ")\n";
    std::cout << "locality ceil(k/(t-1)): " << loc.q << '\n';
  }
  if (design.has_duplicate_blocks()) std::cout << "note: design has repeated blocks\n";
  return missing.empty() ? kExitOk : kExitInvalid;
}

struct BuildArgs {
  std::string method;
  DesignArgs design;
  std::string design2;
  std::string out;
  bool strict = false;
  bool csv = false;
  bool plans = false;
};

int run_build(const BuildArgs& a) {
  const cfr::DesignParams params{a.design.t, a.design.k, a.design.v};
  const auto design = cfr::load_design(a.design.path, params);
  if (!cfr::verify_covering(design).empty()) {
    std::cerr << "error: " << a.design.path << " is not a " << cfr::to_string(params)
              << " covering design\n";
    return kExitInvalid;
  }
  cfr::CfrArray array;
  cfr::DesignParams code_params = params;
  if (a.method == "dup") {
    array = cfr::construct_duplicate(design);
  } else if (a.method == "comb") {
    if (a.design2.empty()) throw CLI::ValidationError("--design2", "required for --method comb");
    const cfr::DesignParams lower{params.t - 1, params.k, params.v};
    const auto design2 = cfr::load_design(a.design2, lower);
    if (!cfr::verify_covering(design2).empty()) {
      std::cerr << "error: " << a.design2 << " is not a " << cfr::to_string(lower)
                << " covering design\n";
      return kExitInvalid;
    }
    array = cfr::construct_combination(design, design2);
  } else {
    auto build = cfr::construct_recursive(design, a.strict);
    for (const auto& w : build.warnings) std::cerr << "warning: " << w << '\n';
    code_params = build.design.params();
    std::cout << "predicted blocks: " << build.prediction.predicted_blocks << " (q="
              << build.prediction.shape.q << ", r=" << build.prediction.shape.r << ", "
              << cfr::to_string(build.prediction.shape.tag)
              << ", coefficient=" << build.prediction.coefficient << ")\n";
    array = std::move(build.array);
  }
  if (params.t < 2 && a.method != "dup") throw cfr::DomainError("constructions need t >= 2");
  write_file(a.out, array);
  const int locality = cfr::construction_locality(a.method, params.t, params.k);
  const auto report = cfr::make_report(array, code_params, locality, false);
  std::cout << (a.csv ? cfr::render_report_csv(report) : cfr::render_report(report, a.plans));
  return report.skip_cost == std::optional<std::int64_t>(0) ? kExitOk : kExitInvalid;
}

struct SkipArgs {
  std::string array;
  int locality = 0;
  int t = 0;
  bool oracle = false;
  bool csv = false;
};

int run_skipcost(const SkipArgs& a) {
  const auto array = cfr::load_array(a.array);
  int locality = a.locality;
  if (locality == 0) {
    if (a.t < 2) throw CLI::ValidationError("--locality", "give --locality or --t >= 2");
    locality = cfr::default_locality(a.t, array.rows());
  }
  const auto cost = cfr::array_skip_cost(array, locality);
  if (a.csv) std::cout << "column,cost,plan\n";
  for (int j = 0; j < array.columns(); ++j) {
    const auto& plan = cost.plans[j];
    if (a.csv) {
      std::cout << (j + 1) << ',' << (plan ? std::to_string(plan->total_cost) : "infeasible")
                << ",\"" << (plan ? cfr::render_plan(*plan) : "") << "\"\n";
    } else {
      std::cout << "column " << (j + 1) << ": ";
      if (plan) {
        std::cout << "cost " << plan->total_cost << ": " << cfr::render_plan(*plan) << '\n';
      } else {
        std::cout << "infeasible\n";
      }
    }
  }
  if (!a.csv) {
    std::cout << "locality: " << locality << '\n';
    std::cout << "cost(A): " << (cost.cost ? std::to_string(*cost.cost) : "infeasible") << '\n';
    if (a.t >= 1 && a.t <= array.rows()) {
      const auto profile = cfr::replication_profile(array);
      std::cout << "rho: " << profile.rho << '\n';
      const auto xi = cfr::expansion_factor(array.columns(), {a.t, array.rows(), array.alphabet()});
      std::cout << "expansion factor: " << cfr::format_decimal(xi) << " (" << cfr::to_string(xi)
                << ")\n";
    }
  }
  if (a.oracle) {
    int mismatches = 0;
    for (int j = 0; j < array.columns(); ++j) {
      const auto reference = cfr::brute_force_repair_cost(array, j, locality);
      const auto fast = cost.plans[j] ? std::optional<std::int64_t>(cost.plans[j]->total_cost)
                                      : std::nullopt;
      if (reference != fast) {
        ++mismatches;
        std::cerr << "oracle mismatch at column " << (j + 1) << '\n';
      }
    }
    std::cout << "oracle: " << (mismatches == 0 ? "agrees" : "MISMATCH") << '\n';
    if (mismatches) return kExitInvalid;
  }
  return kExitOk;
}

struct RandomArgs {
  DesignArgs design;
  std::uint64_t seed = 0;
  std::int64_t max_trials = 100;
  std::string strategy = "global";
  std::string out;
  std::string log;
  int locality = 0;
};

int run_randomize(const RandomArgs& a) {
  const cfr::DesignParams params{a.design.t, a.design.k, a.design.v};
  auto design = cfr::load_design(a.design.path, params);
  if (!cfr::verify_covering(design).empty()) {
    std::cerr << "error: " << a.design.path << " is not a covering design\n";
    return kExitInvalid;
  }
  if (design.has_duplicate_blocks()) {
    design = cfr::remove_duplicate_blocks(design);
    std::cerr << "note: repeated blocks removed, " << design.size() << " remain\n";
  }
  cfr::SearchConfig config;
  config.seed = a.seed;
  config.max_trials = a.max_trials;
  config.strategy = a.strategy == "local" ? cfr::SearchStrategy::kLocalRepair
                                          : cfr::SearchStrategy::kGlobalReshuffle;
  config.locality = a.locality > 0 ? a.locality : cfr::default_locality(params.t, params.k);
  const auto outcome = cfr::search_zero_skip(design, config);
  if (!a.log.empty()) {
    std::ofstream log(a.log);
    if (!log) throw cfr::Error("cannot write " + a.log);
    cfr::write_trial_log(log, outcome);
  }
  if (!outcome.success) {
    std::cout << "exhausted after " << outcome.trials_used << " trials; "
              << outcome.failing_columns.size() << " columns still fail\n";
    return kExitExhausted;
  }
  write_file(a.out, *outcome.array);
  std::cout << "zero skip cost found after " << outcome.trials_used << " trials\n";
  const auto report = cfr::make_report(*outcome.array, params, config.locality, false);
  std::cout << cfr::render_report(report, false);
  return kExitOk;
}

struct ReportArgs {
  int table = 0;
  std::vector<std::string> pairs;
  std::string designs;
  int t = 5, k = 6;
  std::vector<int> v_values{12, 24};
  bool verify = false;
  int sample = 0;
  bool exact = false;
  bool csv = false;
};

int run_report(const ReportArgs& a) {
  if (a.table == 1) {
    auto pairs = cfr::default_asymptotic_pairs();
    if (!a.pairs.empty()) {
      pairs.clear();
      for (const auto& p : a.pairs) {
        const auto comma = p.find(',');
        if (comma == std::string::npos) throw CLI::ValidationError("--pair", "expected t,k");
        pairs.emplace_back(std::stoi(p.substr(0, comma)), std::stoi(p.substr(comma + 1)));
      }
    }
    std::cout << cfr::render_asymptotic_table(cfr::asymptotic_table(pairs), a.csv);
    return kExitOk;
  }
  if (a.designs.empty()) throw CLI::ValidationError("--designs", "required for --table 3");
  cfr::ComparisonOptions options;
  options.t = a.t;
  options.k = a.k;
  options.v_values = a.v_values;
  options.design_dir = a.designs;
  options.verify = a.verify;
  options.sample_columns = a.sample;
  const auto table = cfr::comparison_table(options);
  std::cout << cfr::render_comparison_table(table, a.exact, a.csv);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Zero skip-cost fractional repetition codes from covering designs"};
  app.require_subcommand(1);

  DesignArgs verify;
  bool verify_csv = false;
  auto* verify_cmd = app.add_subcommand("verify-design", "Check coverage and design bounds");
  add_design_args(verify_cmd, verify);
  verify_cmd->add_flag("--csv", verify_csv);

  BuildArgs build;
  auto* build_cmd = app.add_subcommand("build", "Construct a zero skip-cost array");
  build_cmd->add_option("--method", build.method)
      ->required()
      ->check(CLI::IsMember({"dup", "comb", "rec"}));
  add_design_args(build_cmd, build.design);
  build_cmd->add_option("--design2", build.design2, "(t-1,k,v) design for --method comb")
      ->check(CLI::ExistingFile);
  build_cmd->add_option("--out", build.out, "Output array file")->required();
  build_cmd->add_flag("--strict", build.strict, "Fail instead of warning on weak base designs");
  build_cmd->add_flag("--plans", build.plans, "Print a repair plan for every column");
  build_cmd->add_flag("--csv", build.csv);

  SkipArgs skip;
  auto* skip_cmd = app.add_subcommand("skipcost", "Exact skip cost of an array");
  skip_cmd->add_option("--array", skip.array)->required()->check(CLI::ExistingFile);
  skip_cmd->add_option("--locality", skip.locality)->check(CLI::PositiveNumber);
  skip_cmd->add_option("--t", skip.t, "Design strength; sets the default locality");
  skip_cmd->add_flag("--oracle", skip.oracle, "Cross-check against brute-force enumeration");
  skip_cmd->add_flag("--csv", skip.csv);

  RandomArgs rnd;
  auto* rnd_cmd = app.add_subcommand("randomize", "Search random orderings for zero skip cost");
  add_design_args(rnd_cmd, rnd.design);
  rnd_cmd->add_option("--seed", rnd.seed)->required();
  rnd_cmd->add_option("--max-trials", rnd.max_trials)->check(CLI::PositiveNumber);
  rnd_cmd->add_option("--strategy", rnd.strategy)->check(CLI::IsMember({"global", "local"}));
  rnd_cmd->add_option("--out", rnd.out)->required();
  rnd_cmd->add_option("--log", rnd.log, "JSON-lines trial log");
  rnd_cmd->add_option("--locality", rnd.locality)->check(CLI::PositiveNumber);

  ReportArgs report;
  auto* report_cmd = app.add_subcommand("report", "Expansion-factor tables");
  report_cmd->add_option("--table", report.table)->required()->check(CLI::IsMember({1, 3}));
  report_cmd->add_option("--pair", report.pairs, "t,k pair for --table 1 (repeatable)");
  report_cmd->add_option("--designs", report.designs, "Design directory for --table 3")
      ->check(CLI::ExistingDirectory);
  report_cmd->add_option("--t", report.t);
  report_cmd->add_option("--k", report.k);
  report_cmd->add_option("--v", report.v_values, "Resulting point counts (repeatable)");
  report_cmd->add_flag("--verify", report.verify, "Check zero skip cost of every build");
  report_cmd->add_option("--sample", report.sample, "Verify only this many random columns");
  report_cmd->add_flag("--exact", report.exact, "Print exact rationals");
  report_cmd->add_flag("--csv", report.csv);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*verify_cmd) return run_verify(verify, verify_csv);
    if (*build_cmd) return run_build(build);
    if (*skip_cmd) return run_skipcost(skip);
    if (*rnd_cmd) return run_randomize(rnd);
    if (*report_cmd) return run_report(report);
  } catch (const CLI::Error& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const cfr::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitData;
  }
  return kExitUsage;
}
