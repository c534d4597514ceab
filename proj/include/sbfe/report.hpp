#pragma once

#include <string>
#include <vector>

#include "sbfe/oracle.hpp"

namespace sbfe {

// Shortest round-trip-exact decimal form of v ("%.17g" trimmed), used by
// every CSV writer so that equal doubles always serialize identically.
std::string format_full(double v);

// One-decimal fixed form for table display of cost-scale values.
std::string format_cost(double v);

inline const char* kCostCsvHeader =
    "strategy,expected_cost,zero_cost,one_cost,tests_max,n,B";

std::string cost_csv_row(const CostReport& report);

struct BenchRow {
  std::string instance_id;
  CostReport report;
  double opt_cost = 0.0;
  double ratio = 0.0;
};

inline const char* kBenchCsvHeader =
    "instance_id,strategy,n,B,expected_cost,zero_cost,one_cost,opt_cost,"
    "ratio";

std::string bench_csv_row(const BenchRow& row);

// Per-strategy "summary_max"/"summary_mean" rows; only the ratio column is
// populated. Rows follow the strategy order of first appearance.
std::vector<std::string> bench_summary_rows(const std::vector<BenchRow>& rows);

// Plain left-aligned column layout for terminal tables.
std::string render_table(const std::vector<std::vector<std::string>>& rows);

}  // namespace sbfe
