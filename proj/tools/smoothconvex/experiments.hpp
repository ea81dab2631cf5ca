#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "smoothconvex/csv.hpp"
#include "smoothconvex/params.hpp"

namespace smoothconvex {

struct RunResult {
  Table table;
  double final_metric = 0.0;
  double slope = 0.0;  // NaN when the experiment has no rate to fit
};

struct Experiment {
  std::string name;
  std::string summary;
  std::vector<ParamSpec> params;
  std::function<RunResult(const Params&, std::uint64_t seed)> run;
};

const std::vector<Experiment>& registry();
const Experiment* find_experiment(const std::string& name);

}  // namespace smoothconvex
