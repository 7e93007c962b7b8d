#pragma once

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "frameflow/cli/config.hpp"

namespace frameflow::cli {

std::string tool_version();

/// Shortest-safe round-trip form: 17 significant digits.
std::string format_double(double v);

/// run.output_dir if set, else $FRAMEFLOW_OUT_DIR, else the working directory.
/// The directory is created if needed.
std::filesystem::path output_directory(const ExperimentConfig& cfg);

/// CSV file whose first line is a comment carrying the config hash and tool
/// version, followed by the column header.
class CsvWriter {
 public:
  CsvWriter(const std::filesystem::path& path, const ExperimentConfig& cfg, const std::vector<std::string>& columns);

  /// Cells are written verbatim; use format_double for reals.
  void row(const std::vector<std::string>& cells);

 private:
  std::ofstream out_;
  std::size_t width_;
};

/// Writes `body` with "config_hash" and "version" fields added, two-space indent.
void write_json(const std::filesystem::path& path, const ExperimentConfig& cfg, nlohmann::json body);

}  // namespace frameflow::cli
