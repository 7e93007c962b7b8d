#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "frameflow/cli/commands.hpp"
#include "frameflow/cli/output.hpp"

namespace {

struct Args {
  std::string config_path;
  std::vector<std::string> overrides;
  std::string seed;
  std::string out_dir;
  int workers = 0;
};

void add_common(CLI::App* sub, Args& args) {
  sub->add_option("-c,--config", args.config_path, "INI configuration file");
  sub->add_option("-s,--set", args.overrides, "Override one key: section.key=value (repeatable)");
  sub->add_option("--seed", args.seed, "Shorthand for --set run.seed=N");
  sub->add_option("-o,--out", args.out_dir, "Output directory (default: $FRAMEFLOW_OUT_DIR or cwd)");
  sub->add_option("-j,--workers", args.workers, "Worker threads; results do not depend on it");
}

}  // namespace

int main(int argc, char** argv) {
  using namespace frameflow::cli;
  CLI::App app{"Compact-group extensions of hyperbolic dynamics: simulation, transitivity groups, "
               "fiber harmonics and pinching thresholds"};
  app.set_version_flag("--version", tool_version());
  app.require_subcommand(1);

  Args args;
  const std::vector<std::pair<std::string, std::string>> descriptions = {
      {"simulate", "Orbit of an SO(m) extension with an equidistribution report"},
      {"transitivity", "Homoclinic holonomies, transitivity algebra, verdict and invariant tensors"},
      {"harmonics", "Vertical degree spectrum of a fiber section"},
      {"threshold", "Pinching threshold curve as CSV"},
      {"tables", "Structure-group reduction table and its consistency check"},
  };
  for (const auto& [name, text] : descriptions) add_common(app.add_subcommand(name, text), args);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }
  const std::string sub = app.get_subcommands().front()->get_name();

  ExperimentConfig cfg;
  try {
    if (!args.config_path.empty()) cfg = ExperimentConfig::from_file(args.config_path);
    for (const auto& o : args.overrides) cfg.set(o);
    if (!args.seed.empty()) cfg.set("run.seed", args.seed);
    if (!args.out_dir.empty()) cfg.set("run.output_dir", args.out_dir);
    if (args.workers != 0) cfg.set("run.workers", std::to_string(args.workers));
  } catch (const ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return kExitConfig;
  }

  const auto result = run(sub, cfg, std::cerr);
  for (const auto& p : result.artifacts) std::cout << p.string() << "\n";
  return result.exit_code;
}
