#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace smoothconvex {

struct ParamSpec {
  std::string name;
  std::string default_value;
  std::string help;
};

// Flat key = value file; '#' starts a comment, blank lines are skipped.
std::map<std::string, std::string> read_config_file(const std::string& path);

// Experiment parameters: declared defaults overridden by file values, then by flags.
class Params {
 public:
  Params(const std::vector<ParamSpec>& specs, const std::map<std::string, std::string>& overrides);

  double real(const std::string& key) const;
  std::int64_t integer(const std::string& key) const;
  std::vector<double> reals(const std::string& key) const;  // comma separated
  const std::string& text(const std::string& key) const;

 private:
  const std::string& raw(const std::string& key) const;
  std::map<std::string, std::string> values_;
};

// Seeds given as "3", "1,2,5" or "1-10".
std::vector<std::uint64_t> parse_seeds(const std::string& text);

}  // namespace smoothconvex
