#pragma once

#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

#include "frameflow/cli/config.hpp"

namespace frameflow::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNumerical = 1;
inline constexpr int kExitConfig = 2;

const std::vector<std::string>& subcommands();

struct RunResult {
  int exit_code = kExitOk;
  std::vector<std::filesystem::path> artifacts;
};

/// Runs one subcommand and writes its artifacts. Errors are reported on `log`
/// and mapped to exit codes: 2 for configuration problems, 1 for numerical
/// non-convergence (and for a failed table consistency check).
RunResult run(const std::string& subcommand, const ExperimentConfig& cfg, std::ostream& log);

// Individual subcommands; these throw instead of mapping errors.
RunResult run_simulate(const ExperimentConfig& cfg, std::ostream& log);
RunResult run_transitivity(const ExperimentConfig& cfg, std::ostream& log);
RunResult run_harmonics(const ExperimentConfig& cfg, std::ostream& log);
RunResult run_threshold(const ExperimentConfig& cfg, std::ostream& log);
RunResult run_tables(const ExperimentConfig& cfg, std::ostream& log);

}  // namespace frameflow::cli
