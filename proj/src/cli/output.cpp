#include "frameflow/cli/output.hpp"

#include <cstdio>
#include <cstdlib>

namespace frameflow::cli {

std::string tool_version() { return FRAMEFLOW_VERSION; }

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::filesystem::path output_directory(const ExperimentConfig& cfg) {
  std::filesystem::path dir = cfg.get_string("run.output_dir");
  if (dir.empty()) {
    const char* env = std::getenv("FRAMEFLOW_OUT_DIR");
    dir = (env != nullptr && *env != '\0') ? std::filesystem::path(env) : std::filesystem::current_path();
  }
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw ConfigError("cannot create output directory " + dir.string() + ": " + ec.message());
  return dir;
}

CsvWriter::CsvWriter(const std::filesystem::path& path, const ExperimentConfig& cfg,
                     const std::vector<std::string>& columns)
    : out_(path), width_(columns.size()) {
  if (!out_) throw ConfigError("cannot write " + path.string());
  out_ << "# config_hash=" << cfg.hash() << " version=" << tool_version() << "\n";
  row(columns);
}

void CsvWriter::row(const std::vector<std::string>& cells) {
  if (cells.size() != width_) throw std::logic_error("CSV row width mismatch");
  for (std::size_t i = 0; i < cells.size(); ++i) out_ << (i ? "," : "") << cells[i];
  out_ << "\n";
}

void write_json(const std::filesystem::path& path, const ExperimentConfig& cfg, nlohmann::json body) {
  body["config_hash"] = cfg.hash();
  body["version"] = tool_version();
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write " + path.string());
  out << body.dump(2) << "\n";
}

}  // namespace frameflow::cli
