#include "smoothconvex/runner.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <thread>

#include "smoothcvx/core/errors.hpp"
#include "smoothconvex/experiments.hpp"

namespace smoothconvex {
namespace {

struct Outcome {
  int code = kOk;
  std::string message;
  RunResult result;
  double runtime_ms = 0.0;
};

int code_for(const smoothcvx::Error& e) {
  return e.kind() == smoothcvx::ErrorKind::numeric ? kNumericError : kConfigError;
}

Outcome run_one(const Experiment& exp, const Params& params, std::uint64_t seed) {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  try {
    o.result = exp.run(params, seed);
  } catch (const smoothcvx::Error& e) {
    o.code = code_for(e);
    o.message = e.what();
  } catch (const std::exception& e) {
    o.code = kNumericError;
    o.message = e.what();
  }
  o.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return o;
}

std::string registry_listing() {
  std::string s;
  for (const auto& e : registry()) s += "  " + e.name + "\n";
  return s;
}

}  // namespace

void list_experiments(std::ostream& out) {
  for (const auto& e : registry()) {
    out << e.name << "  " << e.summary << "\n";
    for (const auto& p : e.params) out << "    " << p.name << " = " << p.default_value << "  (" << p.help << ")\n";
  }
}

int run(const RunConfig& config, std::ostream& log, std::ostream& err) {
  const Experiment* exp = find_experiment(config.experiment);
  if (!exp) {
    err << "unknown experiment '" << config.experiment << "'; registered experiments:\n" << registry_listing();
    return kConfigError;
  }
  std::optional<Params> params;
  try {
    params.emplace(exp->params, config.overrides);
  } catch (const smoothcvx::Error& e) {
    err << "error: " << e.what() << "\n";
    return kConfigError;
  }

  std::filesystem::path dir = config.output_dir;
  if (dir.empty()) {
    const char* env = std::getenv("SMOOTHCONVEX_OUT");
    dir = env && *env ? env : ".";
  }
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) {
    err << "error: cannot create output directory " << dir.string() << ": " << ec.message() << "\n";
    return kConfigError;
  }

  const std::size_t n = config.seeds.size();
  std::vector<Outcome> outcomes(n);
  const unsigned jobs = std::max(1u, std::min<unsigned>(config.jobs, static_cast<unsigned>(n)));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) outcomes[i] = run_one(*exp, *params, config.seeds[i]);
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  int code = kOk;
  const auto summary_path = dir / "summary.csv";
  const bool fresh = !std::filesystem::exists(summary_path);
  std::ofstream summary(summary_path, std::ios::app | std::ios::binary);
  if (!summary) {
    err << "error: cannot write " << summary_path.string() << "\n";
    return kConfigError;
  }
  if (fresh) summary << "experiment,seed,final_metric,slope,runtime_ms\n";
  for (std::size_t i = 0; i < n; ++i) {
    const auto& o = outcomes[i];
    const std::uint64_t seed = config.seeds[i];
    if (o.code != kOk) {
      err << "error: " << exp->name << " seed " << seed << ": " << o.message << "\n";
      code = std::max(code, o.code);
      continue;
    }
    const auto csv = dir / (exp->name + "_" + std::to_string(seed) + ".csv");
    try {
      write_csv(o.result.table, csv.string());
    } catch (const smoothcvx::Error& e) {
      err << "error: " << e.what() << "\n";
      code = std::max(code, static_cast<int>(kConfigError));
      continue;
    }
    summary << exp->name << "," << seed << "," << format_number(o.result.final_metric) << ","
            << format_number(o.result.slope) << "," << format_number(std::round(o.runtime_ms * 1000.0) / 1000.0)
            << "\n";
    log << exp->name << " seed " << seed << ": final_metric " << format_number(o.result.final_metric) << ", slope "
        << format_number(o.result.slope) << " -> " << csv.string() << "\n";
  }
  return code;
}

}  // namespace smoothconvex
