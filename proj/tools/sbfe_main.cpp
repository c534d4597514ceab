// Command-line front end: evaluation-cost reports, the verification gap
// report, the pinned-root-pair table, instance generation, and benchmarking.
// Exit codes: 0 success, 2 bad input, 3 enumeration limit exceeded, 4 value
// vector of the wrong shape for the command, 1 internal error.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sbfe/errors.hpp"
#include "sbfe/generator.hpp"
#include "sbfe/goal.hpp"
#include "sbfe/io.hpp"
#include "sbfe/oracle.hpp"
#include "sbfe/report.hpp"
#include "sbfe/strategy.hpp"

namespace {

using namespace sbfe;

std::vector<std::string> split_strategies(const std::string& list) {
  std::vector<std::string> names;
  std::size_t begin = 0;
  while (begin <= list.size()) {
    const std::size_t comma = list.find(',', begin);
    const std::string name =
        list.substr(begin, comma == std::string::npos ? comma : comma - begin);
    if (name.empty()) {
      throw ParseError("empty strategy name in \"" + list + "\"");
    }
    names.push_back(name);
    if (comma == std::string::npos) break;
    begin = comma + 1;
  }
  return names;
}

// "opt" runs the materialized optimal tree; everything else steps directly.
std::unique_ptr<Strategy> resolve_strategy(const std::string& name,
                                           const Problem& problem,
                                           int limit) {
  if (name == "opt") {
    OptResult result =
        opt_expected_cost(problem.instance, problem.values, limit);
    return std::make_unique<TreeStrategy>(std::move(result.tree), "opt");
  }
  return make_strategy(name, problem.instance, problem.values);
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw ParseError(out_path + ": cannot open file for writing");
  out << text;
  if (!out) throw ParseError(out_path + ": write failed");
}

std::string variable_label(int index) {
  return "x" + std::to_string(index + 1);
}

struct CostOptions {
  std::string instance_path;
  std::string strategies;
  std::string mode = "exact";
  std::int64_t trials = 100000;
  std::uint64_t seed = 1;
  int limit = kDefaultEnumerationLimit;
  std::string format = "table";
  std::string out;
};

int run_cost(const CostOptions& opt) {
  const Problem problem = load_problem(opt.instance_path);
  const std::vector<std::string> names = split_strategies(opt.strategies);

  std::vector<CostReport> reports;
  std::vector<double> errors;  // std_error per row, monte-carlo mode only
  for (const std::string& name : names) {
    const std::unique_ptr<Strategy> strategy =
        resolve_strategy(name, problem, opt.limit);
    if (opt.mode == "exact") {
      CostReport report = strategy_expected_cost(*strategy, problem.instance,
                                                 problem.values, opt.limit);
      report.strategy = name;
      reports.push_back(std::move(report));
    } else {
      const MonteCarloResult mc =
          monte_carlo_cost(*strategy, problem.instance, problem.values,
                           opt.trials, opt.seed);
      CostReport report;
      report.strategy = name;
      report.expected_cost = mc.mean;
      report.zero_cost = mc.zero_mean;
      report.one_cost = mc.one_mean;
      report.tests_max = mc.tests_max;
      report.n = problem.instance.n();
      report.B = problem.values.block_count();
      reports.push_back(std::move(report));
      errors.push_back(mc.std_error);
    }
  }

  std::string text;
  if (opt.format == "csv") {
    text += kCostCsvHeader;
    text += '\n';
    for (const CostReport& report : reports) {
      text += cost_csv_row(report);
      text += '\n';
    }
  } else {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> header = {"strategy", "expected_cost",
                                       "zero_cost", "one_cost", "tests_max",
                                       "n", "B"};
    if (opt.mode == "mc") header.push_back("std_error");
    rows.push_back(header);
    for (std::size_t i = 0; i < reports.size(); ++i) {
      const CostReport& r = reports[i];
      std::vector<std::string> row = {
          r.strategy,           format_cost(r.expected_cost),
          format_cost(r.zero_cost), format_cost(r.one_cost),
          std::to_string(r.tests_max), std::to_string(r.n),
          std::to_string(r.B)};
      if (opt.mode == "mc") row.push_back(format_cost(errors[i]));
      rows.push_back(std::move(row));
    }
    text = render_table(rows);
  }
  write_output(text, opt.out);
  return 0;
}

struct GapOptions {
  std::string instance_path;
  int limit = kDefaultEnumerationLimit;
  std::string out;
};

int run_verify_gap(const GapOptions& opt) {
  const Problem problem = load_problem(opt.instance_path);
  const OptResult best =
      opt_expected_cost(problem.instance, problem.values, opt.limit);
  const OptResult zero_best =
      l_optimal_cost(0, problem.instance, problem.values, opt.limit);
  const OptResult one_best =
      l_optimal_cost(1, problem.instance, problem.values, opt.limit);
  const TreeStrategy opt_strategy(best.tree, "opt");
  const CostReport tree_report = strategy_expected_cost(
      opt_strategy, problem.instance, problem.values, opt.limit);

  const double verification = zero_best.cost + one_best.cost;
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"n", std::to_string(problem.instance.n())});
  rows.push_back({"blocks", std::to_string(problem.values.block_count())});
  rows.push_back({"evaluation_optimal_cost", format_cost(best.cost)});
  rows.push_back({"zero_optimal_cost", format_cost(zero_best.cost)});
  rows.push_back({"one_optimal_cost", format_cost(one_best.cost)});
  rows.push_back({"verification_optimal_cost", format_cost(verification)});
  rows.push_back(
      {"optimal_tree_zero_cost", format_cost(tree_report.zero_cost)});
  rows.push_back(
      {"optimal_tree_one_cost", format_cost(tree_report.one_cost)});
  rows.push_back({"verification_lt_evaluation",
                  verification < best.cost ? "true" : "false"});
  write_output(render_table(rows), opt.out);
  return 0;
}

struct Table2Options {
  std::string instance_path;
  int limit = kDefaultEnumerationLimit;
  std::string format = "table";
  std::string out;
};

int blocks_in_window(const ValueVector& values, int lo, int hi) {
  int count = 1;
  for (int i = lo + 1; i <= hi; ++i) {
    if (values.entry(i) != values.entry(i - 1)) ++count;
  }
  return count;
}

int run_table2(const Table2Options& opt) {
  const Problem problem = load_problem(opt.instance_path);
  const ValueVector& values = problem.values;
  const int n = problem.instance.n();
  // The pinned-pair sweep is defined for the four-variable three-block
  // shape whose one-step reductions are threshold functions (or their
  // negations): first test 1, then either second-level outcome.
  const bool shape_ok = n == 4 && values.block_count() == 3 &&
                        blocks_in_window(values, 1, 4) <= 2 &&
                        blocks_in_window(values, 1, 3) <= 2 &&
                        blocks_in_window(values, 0, 2) <= 2;
  if (!shape_ok) {
    throw ShapeError(
        "table2 needs n = 4 and three blocks with threshold-shaped "
        "reductions; got n = " +
        std::to_string(n) + ", B = " +
        std::to_string(values.block_count()));
  }

  struct Row {
    int root;
    int zero_child;
    double cost;
  };
  std::vector<Row> entries;
  for (int root = 0; root < n; ++root) {
    for (int child = 0; child < n; ++child) {
      if (child == root) continue;
      entries.push_back(Row{root, child,
                            pinned_pair_cost(root, child, problem.instance,
                                             values, opt.limit)});
    }
  }
  std::size_t min_index = 0;
  for (std::size_t i = 1; i < entries.size(); ++i) {
    if (entries[i].cost < entries[min_index].cost) min_index = i;
  }

  std::string text;
  if (opt.format == "csv") {
    text = "root,zero_child,expected_cost,is_min\n";
    for (std::size_t i = 0; i < entries.size(); ++i) {
      text += variable_label(entries[i].root) + "," +
              variable_label(entries[i].zero_child) + "," +
              format_full(entries[i].cost) + "," +
              (i == min_index ? "1" : "0") + "\n";
    }
  } else {
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"root", "zero_child", "expected_cost", ""});
    for (std::size_t i = 0; i < entries.size(); ++i) {
      rows.push_back({variable_label(entries[i].root),
                      variable_label(entries[i].zero_child),
                      format_cost(entries[i].cost),
                      i == min_index ? "*" : ""});
    }
    text = render_table(rows);
  }
  write_output(text, opt.out);
  return 0;
}

struct GenOptions {
  int n = 4;
  int blocks = 2;
  std::uint64_t seed = 1;
  double cost_min = 100.0;
  double cost_max = 10000.0;
  double prob_min = 0.05;
  double prob_max = 0.95;
  std::string out;
};

int run_gen(const GenOptions& opt) {
  GeneratorConfig config;
  config.n = opt.n;
  config.blocks = opt.blocks;
  config.cost_min = opt.cost_min;
  config.cost_max = opt.cost_max;
  config.prob_min = opt.prob_min;
  config.prob_max = opt.prob_max;
  std::mt19937_64 rng(opt.seed);
  const Problem problem = random_problem(config, rng);
  write_output(problem_to_json(problem), opt.out);
  return 0;
}

struct BenchOptions {
  std::string strategies;
  std::vector<std::string> instance_paths;
  int gen_count = 0;
  GenOptions gen;
  int limit = kDefaultEnumerationLimit;
  std::string format = "table";
  std::string out;
};

int run_bench(const BenchOptions& opt) {
  const std::vector<std::string> names = split_strategies(opt.strategies);

  std::vector<std::pair<std::string, Problem>> problems;
  if (!opt.instance_paths.empty()) {
    for (const std::string& path : opt.instance_paths) {
      problems.emplace_back(std::filesystem::path(path).stem().string(),
                            load_problem(path));
    }
  } else if (opt.gen_count > 0) {
    GeneratorConfig config;
    config.n = opt.gen.n;
    config.blocks = opt.gen.blocks;
    config.cost_min = opt.gen.cost_min;
    config.cost_max = opt.gen.cost_max;
    config.prob_min = opt.gen.prob_min;
    config.prob_max = opt.gen.prob_max;
    std::mt19937_64 rng(opt.gen.seed);
    for (int i = 0; i < opt.gen_count; ++i) {
      char id[32];
      std::snprintf(id, sizeof id, "gen-%04d", i);
      problems.emplace_back(id, random_problem(config, rng));
    }
  } else {
    throw ParseError("bench needs --instances files or --gen-count > 0");
  }

  std::vector<BenchRow> rows;
  for (const auto& [id, problem] : problems) {
    const double opt_cost =
        opt_expected_cost(problem.instance, problem.values, opt.limit).cost;
    for (const std::string& name : names) {
      const std::unique_ptr<Strategy> strategy =
          resolve_strategy(name, problem, opt.limit);
      CostReport report = strategy_expected_cost(*strategy, problem.instance,
                                                 problem.values, opt.limit);
      report.strategy = name;
      BenchRow row;
      row.instance_id = id;
      row.opt_cost = opt_cost;
      row.ratio = opt_cost > 0.0
                      ? report.expected_cost / opt_cost
                      : (report.expected_cost == 0.0 ? 1.0 : 0.0);
      row.report = std::move(report);
      rows.push_back(std::move(row));
    }
  }

  std::string text;
  if (opt.format == "csv") {
    text += kBenchCsvHeader;
    text += '\n';
    for (const BenchRow& row : rows) {
      text += bench_csv_row(row);
      text += '\n';
    }
    for (const std::string& line : bench_summary_rows(rows)) {
      text += line;
      text += '\n';
    }
  } else {
    std::vector<std::vector<std::string>> cells;
    cells.push_back({"instance_id", "strategy", "n", "B", "expected_cost",
                     "zero_cost", "one_cost", "opt_cost", "ratio"});
    for (const BenchRow& row : rows) {
      cells.push_back({row.instance_id, row.report.strategy,
                       std::to_string(row.report.n),
                       std::to_string(row.report.B),
                       format_cost(row.report.expected_cost),
                       format_cost(row.report.zero_cost),
                       format_cost(row.report.one_cost),
                       format_cost(row.opt_cost), format_full(row.ratio)});
    }
    // The summary rows share the CSV column layout; align them in the same
    // table rather than appending raw CSV.
    for (const std::string& line : bench_summary_rows(rows)) {
      std::vector<std::string> fields;
      std::size_t begin = 0;
      while (begin <= line.size()) {
        const std::size_t comma = line.find(',', begin);
        fields.push_back(line.substr(
            begin, comma == std::string::npos ? comma : comma - begin));
        if (comma == std::string::npos) break;
        begin = comma + 1;
      }
      cells.push_back(std::move(fields));
    }
    text = render_table(cells);
  }
  write_output(text, opt.out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "sbfe: evaluate symmetric boolean functions with costly, uncertain "
      "tests"};
  app.require_subcommand(1);

  CostOptions cost_opt;
  CLI::App* cost = app.add_subcommand(
      "cost", "Expected-cost report for one or more strategies");
  cost->add_option("--instance", cost_opt.instance_path, "instance JSON file")
      ->required();
  cost->add_option("--strategy", cost_opt.strategies,
                   "comma-separated names: or, and, sbbd, exactk, b1, "
                   "b1-binsearch, greedy, opt")
      ->required();
  cost->add_option("--mode", cost_opt.mode, "exact or mc")
      ->check(CLI::IsMember({"exact", "mc"}));
  cost->add_option("--trials", cost_opt.trials, "monte-carlo trials")
      ->check(CLI::PositiveNumber);
  cost->add_option("--seed", cost_opt.seed, "monte-carlo seed");
  cost->add_option("--limit", cost_opt.limit, "exact enumeration cap on n");
  cost->add_option("--format", cost_opt.format, "table or csv")
      ->check(CLI::IsMember({"table", "csv"}));
  cost->add_option("--out", cost_opt.out, "write output to this file");

  GapOptions gap_opt;
  CLI::App* gap = app.add_subcommand(
      "verify-gap",
      "Compare the best verification cost with the best evaluation cost");
  gap->add_option("--instance", gap_opt.instance_path, "instance JSON file")
      ->required();
  gap->add_option("--limit", gap_opt.limit, "exact enumeration cap on n");
  gap->add_option("--out", gap_opt.out, "write output to this file");

  Table2Options t2_opt;
  CLI::App* t2 = app.add_subcommand(
      "table2",
      "Expected cost of every (root, zero-branch child) pinned pair");
  t2->add_option("--instance", t2_opt.instance_path, "instance JSON file")
      ->required();
  t2->add_option("--limit", t2_opt.limit, "exact enumeration cap on n");
  t2->add_option("--format", t2_opt.format, "table or csv")
      ->check(CLI::IsMember({"table", "csv"}));
  t2->add_option("--out", t2_opt.out, "write output to this file");

  GenOptions gen_opt;
  CLI::App* gen = app.add_subcommand("gen", "Generate a random instance");
  gen->add_option("--n", gen_opt.n, "number of variables")->required();
  gen->add_option("--blocks", gen_opt.blocks,
                  "exact block count of the value vector")
      ->required();
  gen->add_option("--seed", gen_opt.seed, "generator seed");
  gen->add_option("--cost-min", gen_opt.cost_min, "minimum test cost");
  gen->add_option("--cost-max", gen_opt.cost_max, "maximum test cost");
  gen->add_option("--prob-min", gen_opt.prob_min,
                  "minimum probability (clipped to 0.01)");
  gen->add_option("--prob-max", gen_opt.prob_max,
                  "maximum probability (clipped to 0.99)");
  gen->add_option("--out", gen_opt.out, "write the instance to this file");

  BenchOptions bench_opt;
  CLI::App* bench = app.add_subcommand(
      "bench", "Cost and cost/optimal ratio across instances");
  bench->add_option("--strategy", bench_opt.strategies,
                    "comma-separated strategy names")
      ->required();
  bench->add_option("--instances", bench_opt.instance_paths,
                    "instance JSON files");
  bench->add_option("--gen-count", bench_opt.gen_count,
                    "generate this many instances instead");
  bench->add_option("--n", bench_opt.gen.n, "generated instance size");
  bench->add_option("--blocks", bench_opt.gen.blocks,
                    "generated value-vector blocks");
  bench->add_option("--seed", bench_opt.gen.seed, "generator seed");
  bench->add_option("--cost-min", bench_opt.gen.cost_min, "minimum cost");
  bench->add_option("--cost-max", bench_opt.gen.cost_max, "maximum cost");
  bench->add_option("--prob-min", bench_opt.gen.prob_min,
                    "minimum probability");
  bench->add_option("--prob-max", bench_opt.gen.prob_max,
                    "maximum probability");
  bench->add_option("--limit", bench_opt.limit, "exact enumeration cap on n");
  bench->add_option("--format", bench_opt.format, "table or csv")
      ->check(CLI::IsMember({"table", "csv"}));
  bench->add_option("--out", bench_opt.out, "write output to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    if (*cost) return run_cost(cost_opt);
    if (*gap) return run_verify_gap(gap_opt);
    if (*t2) return run_table2(t2_opt);
    if (*gen) return run_gen(gen_opt);
    if (*bench) return run_bench(bench_opt);
  } catch (const ShapeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const LimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
