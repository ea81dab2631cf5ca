#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "smoothcvx/core/oracle.hpp"
#include "smoothcvx/core/types.hpp"

namespace smoothcvx {

inline constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct TraceRecord {
  std::uint64_t iter = 0;  // iteration, round or epoch index
  double objective = kNaN;
  double suboptimality = kNaN;
  double constraint = kNaN;
  double dual = kNaN;
  std::uint64_t calls_stochastic = 0;
  std::uint64_t calls_full = 0;
  double variance_sgd = kNaN;
  double variance_mixed = kNaN;
  double radius = kNaN;  // current domain size for shrinking-domain methods
  Point iterate;  // empty unless snapshots were requested
};

struct Trace {
  std::uint64_t seed = 0;
  // Auto-selected parameters and budget deviations, e.g. {"T1", "512"}.
  std::map<std::string, std::string> header;
  std::vector<TraceRecord> records;
  Point solution;
  OracleCounters counters;

  void note(const std::string& key, double value);
  void note(const std::string& key, const std::string& value) { header[key] = value; }
};

// Bitwise equality of every field (NaN compares equal to NaN).
bool identical(const Trace& a, const Trace& b);

}  // namespace smoothcvx
