#pragma once

#include <string>
#include <vector>

namespace smoothconvex {

// Numeric table written as CSV: header row, '.' decimals, '\n' endings, no quoting.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  void add(std::vector<double> row);
  std::size_t column(const std::string& name) const;
  std::vector<double> values(const std::string& name) const;
};

// Shortest round-trip decimal form; "nan", "inf" and "-inf" for non-finite values.
std::string format_number(double x);

void write_csv(const Table& table, const std::string& path);
Table read_csv(const std::string& path);

}  // namespace smoothconvex
