#include "smoothconvex/csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "smoothcvx/core/errors.hpp"

namespace smoothconvex {

void Table::add(std::vector<double> row) {
  if (row.size() != columns.size())
    throw smoothcvx::InputError("table row has " + std::to_string(row.size()) + " cells for " +
                                std::to_string(columns.size()) + " columns");
  rows.push_back(std::move(row));
}

std::size_t Table::column(const std::string& name) const {
  for (std::size_t i = 0; i < columns.size(); ++i)
    if (columns[i] == name) return i;
  throw smoothcvx::InputError("no column named " + name);
}

std::vector<double> Table::values(const std::string& name) const {
  const std::size_t j = column(name);
  std::vector<double> out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.push_back(r[j]);
  return out;
}

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  if (ec != std::errc()) throw smoothcvx::NumericError("cannot format number");
  return std::string(buf, ptr);
}

void write_csv(const Table& table, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw smoothcvx::ConfigError("cannot write " + path);
  for (std::size_t j = 0; j < table.columns.size(); ++j) out << (j ? "," : "") << table.columns[j];
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t j = 0; j < row.size(); ++j) out << (j ? "," : "") << format_number(row[j]);
    out << '\n';
  }
  if (!out) throw smoothcvx::ConfigError("failed writing " + path);
}

Table read_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw smoothcvx::InputError("cannot open " + path);
  Table t;
  std::string line;
  if (!std::getline(in, line)) throw smoothcvx::ParseError(1, "empty CSV file " + path);
  {
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) t.columns.push_back(cell);
  }
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::vector<double> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      if (cell == "nan") row.push_back(std::nan(""));
      else if (cell == "inf") row.push_back(INFINITY);
      else if (cell == "-inf") row.push_back(-INFINITY);
      else {
        double v = 0.0;
        const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
        if (ec != std::errc() || ptr != cell.data() + cell.size())
          throw smoothcvx::ParseError(lineno, "bad number '" + cell + "'");
        row.push_back(v);
      }
    }
    if (row.size() != t.columns.size()) throw smoothcvx::ParseError(lineno, "wrong number of cells");
    t.rows.push_back(std::move(row));
  }
  return t;
}

}  // namespace smoothconvex
