#include "frameflow/cli/config.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <boost/algorithm/string.hpp>
#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

namespace frameflow::cli {

const std::map<std::string, std::string>& config_schema() {
  static const std::map<std::string, std::string> schema = {
      {"run.seed", ""},
      {"run.output_dir", ""},
      {"run.workers", "1"},
      {"model.base", "torus"},
      {"model.matrix", "2,1,1,1"},
      {"model.m", "3"},
      {"model.cocycle", "random"},
      {"model.amplitude", "1.0"},
      {"simulate.steps", "100000"},
      {"simulate.dt", "0.1"},
      {"simulate.orbits", "1"},
      {"simulate.dump_every", "100"},
      {"simulate.reortho_every", "64"},
      {"transitivity.box_radius", "2"},
      {"transitivity.generators", "8"},
      {"transitivity.holonomy_tol", "1e-12"},
      {"transitivity.depth_cap", "200"},
      {"transitivity.max_word_length", "6"},
      {"transitivity.max_words", "200000"},
      {"transitivity.injectivity_radius", "0.5"},
      {"transitivity.min_generators", "8"},
      {"transitivity.representations", "standard,lambda2,lambda3,sym2_0"},
      {"harmonics.n", "3"},
      {"harmonics.k", "2"},
      {"harmonics.section", "pi_star"},
      {"harmonics.exponents", ""},
      {"harmonics.k_max", "8"},
      {"harmonics.threshold", "1e-8"},
      {"harmonics.zonal", "false"},
      {"threshold.n_min", "3"},
      {"threshold.n_max", "150"},
      {"threshold.target_degree", "3"},
      {"threshold.q_mode", "calibrated"},
      {"threshold.q1", "0.277"},
      {"threshold.q2", "0.497"},
      {"threshold.q3", "0.497"},
      {"threshold.q4", "0.557"},
      {"tables.n_max", "200"},
      {"tables.n_check", "20"},
  };
  return schema;
}

bool is_presentation_key(const std::string& key) { return key == "run.output_dir" || key == "run.workers"; }

namespace {

void check_key(const std::string& key) {
  if (config_schema().count(key) == 0) throw ConfigError("unknown config key '" + key + "'");
}

}  // namespace

ExperimentConfig ExperimentConfig::from_string(const std::string& text) {
  boost::property_tree::ptree tree;
  std::istringstream in(text);
  try {
    boost::property_tree::ini_parser::read_ini(in, tree);
  } catch (const boost::property_tree::ini_parser_error& e) {
    throw ConfigError(std::string("malformed config: ") + e.message() + " at line " + std::to_string(e.line()));
  }
  ExperimentConfig cfg;
  for (const auto& [section, body] : tree) {
    if (body.empty()) throw ConfigError("config key '" + section + "' must live in a section");
    for (const auto& [key, value] : body) cfg.set(section + "." + key, value.data());
  }
  return cfg;
}

ExperimentConfig ExperimentConfig::from_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return from_string(buf.str());
}

void ExperimentConfig::set(const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos) throw ConfigError("override must look like section.key=value: " + assignment);
  set(boost::trim_copy(assignment.substr(0, eq)), boost::trim_copy(assignment.substr(eq + 1)));
}

void ExperimentConfig::set(const std::string& key, const std::string& value) {
  check_key(key);
  values_[key] = value;
}

std::string ExperimentConfig::get_string(const std::string& key) const {
  check_key(key);
  const auto it = values_.find(key);
  return it != values_.end() ? it->second : config_schema().at(key);
}

double ExperimentConfig::get_double(const std::string& key) const {
  const std::string s = get_string(key);
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size() || !std::isfinite(v)) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ConfigError("'" + key + "' must be a finite number, got '" + s + "'");
  }
}

long ExperimentConfig::get_long(const std::string& key) const {
  const std::string s = get_string(key);
  try {
    std::size_t used = 0;
    const long v = std::stol(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ConfigError("'" + key + "' must be an integer, got '" + s + "'");
  }
}

int ExperimentConfig::get_int(const std::string& key) const {
  const long v = get_long(key);
  if (v < -2147483647L || v > 2147483647L) throw ConfigError("'" + key + "' out of range");
  return static_cast<int>(v);
}

bool ExperimentConfig::get_bool(const std::string& key) const {
  const std::string s = boost::to_lower_copy(get_string(key));
  if (s == "true" || s == "1" || s == "yes") return true;
  if (s == "false" || s == "0" || s == "no") return false;
  throw ConfigError("'" + key + "' must be true or false, got '" + s + "'");
}

std::vector<std::string> ExperimentConfig::get_list(const std::string& key) const {
  std::vector<std::string> parts;
  const std::string s = get_string(key);
  if (boost::trim_copy(s).empty()) return parts;
  boost::split(parts, s, boost::is_any_of(","));
  for (auto& p : parts) boost::trim(p);
  return parts;
}

std::vector<int> ExperimentConfig::get_int_list(const std::string& key) const {
  std::vector<int> out;
  for (const auto& p : get_list(key)) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(p, &used));
      if (used != p.size()) throw std::invalid_argument(p);
    } catch (const std::exception&) {
      throw ConfigError("'" + key + "' must be a comma-separated integer list, got '" + get_string(key) + "'");
    }
  }
  return out;
}

std::uint64_t ExperimentConfig::seed() const {
  if (!is_set("run.seed") || get_string("run.seed").empty()) {
    throw ConfigError("run.seed is required for randomized runs");
  }
  const std::string s = get_string("run.seed");
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(s, &used);
    if (used != s.size() || s.front() == '-') throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ConfigError("run.seed must be a non-negative integer, got '" + s + "'");
  }
}

std::string ExperimentConfig::canonical() const {
  std::string out;
  for (const auto& [key, def] : config_schema()) {
    if (is_presentation_key(key)) continue;
    out += key + "=" + get_string(key) + "\n";
  }
  return out;
}

std::string ExperimentConfig::hash() const {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : canonical()) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace frameflow::cli
