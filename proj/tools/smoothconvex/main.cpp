#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "smoothcvx/core/errors.hpp"
#include "smoothconvex/params.hpp"
#include "smoothconvex/runner.hpp"

using namespace smoothconvex;

int main(int argc, char** argv) {
  CLI::App app{"smoothconvex: desk-scale experiments for smooth convex optimization"};
  app.require_subcommand(1);

  auto* list = app.add_subcommand("list", "List experiments and their keys");

  auto* run_cmd = app.add_subcommand("run", "Run one experiment");
  std::string experiment, seeds = "1", config_file, out;
  unsigned jobs = 1;
  run_cmd->add_option("experiment", experiment, "Experiment name")->required();
  run_cmd->add_option("--seed", seeds, "Seed, list (1,2,5) or range (1-10)");
  run_cmd->add_option("--config", config_file, "Flat key = value file");
  run_cmd->add_option("--out", out, "Output directory (default $SMOOTHCONVEX_OUT or .)");
  run_cmd->add_option("--jobs", jobs, "Seeds run in parallel")->check(CLI::PositiveNumber);
  run_cmd->allow_extras();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kConfigError;
  }

  if (*list) {
    list_experiments(std::cout);
    return kOk;
  }

  RunConfig cfg;
  cfg.experiment = experiment;
  cfg.output_dir = out;
  cfg.jobs = jobs;
  try {
    cfg.seeds = parse_seeds(seeds);
    if (!config_file.empty()) cfg.overrides = read_config_file(config_file);
    const std::vector<std::string> extras = run_cmd->remaining();
    for (std::size_t i = 0; i < extras.size(); ++i) {
      const std::string& a = extras[i];
      if (a.rfind("--", 0) != 0) throw smoothcvx::ConfigError("unexpected argument '" + a + "'");
      const auto eq = a.find('=');
      if (eq != std::string::npos) {
        cfg.overrides[a.substr(2, eq - 2)] = a.substr(eq + 1);
      } else if (i + 1 < extras.size()) {
        cfg.overrides[a.substr(2)] = extras[++i];
      } else {
        throw smoothcvx::ConfigError("flag '" + a + "' needs a value");
      }
    }
  } catch (const smoothcvx::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kConfigError;
  }
  return run(cfg, std::cout, std::cerr);
}
