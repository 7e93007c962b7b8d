#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace frameflow::cli {

/// Invalid configuration: unknown key, malformed value, missing seed.
class ConfigError : public std::invalid_argument {
 public:
  explicit ConfigError(const std::string& what) : std::invalid_argument(what) {}
};

/// Every accepted "section.key" with its default value. A key with an empty
/// default (run.seed) has no default.
const std::map<std::string, std::string>& config_schema();

/// Keys that do not influence numeric payloads and are left out of the hash.
bool is_presentation_key(const std::string& key);

/// Sectioned key-value experiment configuration.
class ExperimentConfig {
 public:
  ExperimentConfig() = default;

  /// INI text; throws ConfigError on syntax errors or unknown keys.
  static ExperimentConfig from_string(const std::string& text);
  static ExperimentConfig from_file(const std::filesystem::path& path);

  /// Applies one override of the form "section.key=value".
  void set(const std::string& assignment);
  void set(const std::string& key, const std::string& value);

  bool is_set(const std::string& key) const { return values_.count(key) != 0; }
  std::string get_string(const std::string& key) const;
  double get_double(const std::string& key) const;
  long get_long(const std::string& key) const;
  int get_int(const std::string& key) const;
  bool get_bool(const std::string& key) const;
  std::vector<std::string> get_list(const std::string& key) const;
  std::vector<int> get_int_list(const std::string& key) const;

  /// Throws ConfigError when run.seed is absent.
  std::uint64_t seed() const;

  /// "section.key=value" lines over all schema keys with defaults filled in,
  /// sorted, excluding presentation keys.
  std::string canonical() const;
  /// FNV-1a 64 of canonical(), as 16 hex digits.
  std::string hash() const;

 private:
  std::map<std::string, std::string> values_;
};

}  // namespace frameflow::cli
