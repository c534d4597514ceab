#include "sbfe/report.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <map>

namespace sbfe {

std::string format_full(double v) {
  char buffer[64];
  // Shortest decimal form that parses back to the same double; caps at the
  // 17 significant digits that always round-trip. Fixed notation is
  // preferred over an equally exact but shorter scientific form, so
  // cost-scale values read naturally; magnitudes %g only ever prints with
  // an exponent fall back to the shortest scientific form.
  std::string scientific;
  for (int precision = 1; precision <= 17; ++precision) {
    std::snprintf(buffer, sizeof buffer, "%.*g", precision, v);
    if (std::strtod(buffer, nullptr) != v) continue;
    if (std::strchr(buffer, 'e') == nullptr) return buffer;
    if (scientific.empty()) scientific = buffer;
  }
  return scientific.empty() ? buffer : scientific;
}

std::string format_cost(double v) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.1f", v);
  return buffer;
}

std::string cost_csv_row(const CostReport& report) {
  return report.strategy + "," + format_full(report.expected_cost) + "," +
         format_full(report.zero_cost) + "," + format_full(report.one_cost) +
         "," + std::to_string(report.tests_max) + "," +
         std::to_string(report.n) + "," + std::to_string(report.B);
}

std::string bench_csv_row(const BenchRow& row) {
  return row.instance_id + "," + row.report.strategy + "," +
         std::to_string(row.report.n) + "," + std::to_string(row.report.B) +
         "," + format_full(row.report.expected_cost) + "," +
         format_full(row.report.zero_cost) + "," +
         format_full(row.report.one_cost) + "," + format_full(row.opt_cost) +
         "," + format_full(row.ratio);
}

std::vector<std::string> bench_summary_rows(
    const std::vector<BenchRow>& rows) {
  std::vector<std::string> order;
  std::map<std::string, std::pair<double, double>> stats;  // max, sum
  std::map<std::string, int> counts;
  for (const BenchRow& row : rows) {
    const std::string& name = row.report.strategy;
    if (counts.find(name) == counts.end()) {
      order.push_back(name);
      stats[name] = {row.ratio, 0.0};
    }
    auto& [max_ratio, sum] = stats[name];
    if (row.ratio > max_ratio) max_ratio = row.ratio;
    sum += row.ratio;
    ++counts[name];
  }
  std::vector<std::string> lines;
  for (const std::string& name : order) {
    const auto& [max_ratio, sum] = stats[name];
    lines.push_back("summary_max," + name + ",,,,,,," +
                    format_full(max_ratio));
    lines.push_back("summary_mean," + name + ",,,,,,," +
                    format_full(sum / counts[name]));
  }
  return lines;
}

std::string render_table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> widths;
  for (const auto& row : rows) {
    if (widths.size() < row.size()) widths.resize(row.size(), 0);
    for (std::size_t c = 0; c < row.size(); ++c) {
      widths[c] = std::max(widths[c], row[c].size());
    }
  }
  std::string out;
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      out += row[c];
      if (c + 1 < row.size()) {
        out.append(widths[c] - row[c].size() + 2, ' ');
      }
    }
    out += '\n';
  }
  return out;
}

}  // namespace sbfe
