#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace smoothconvex {

enum ExitCode { kOk = 0, kConfigError = 2, kNumericError = 3 };

struct RunConfig {
  std::string experiment;
  std::vector<std::uint64_t> seeds{1};
  std::map<std::string, std::string> overrides;  // config file values, then flag values
  std::string output_dir;                        // empty: $SMOOTHCONVEX_OUT, else "."
  unsigned jobs = 1;
};

// Runs every seed of one experiment, writes <experiment>_<seed>.csv per seed and appends one
// row per run to summary.csv. Messages go to `log`, errors to `err`.
int run(const RunConfig& config, std::ostream& log, std::ostream& err);

// One line per registered experiment with its keys.
void list_experiments(std::ostream& out);

}  // namespace smoothconvex
