// BridgeWorld command line: run one condition with per-iteration telemetry
// (`simulate`) or the repeated-run suite with per-condition summaries
// (`experiment`). Exit codes: 0 success, 1 validation error, 2 I/O error.

#include <cstdint>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bridgeworld/config.hpp"
#include "bridgeworld/experiment.hpp"
#include "bridgeworld/io.hpp"

namespace {

using namespace bridgeworld;

struct CommonArgs {
  int iterations = 1000;
  int population = 100;
  std::uint64_t seed = 0;
  std::string config_path;
  std::vector<std::string> overrides;
  std::string out_path;
};

void add_common_options(CLI::App& cmd, CommonArgs& args) {
  cmd.add_option("--iterations", args.iterations, "Cycles per run")
      ->capture_default_str();
  cmd.add_option("--population", args.population, "Agents per world")
      ->capture_default_str();
  cmd.add_option("--seed", args.seed, "64-bit unsigned base seed")
      ->capture_default_str();
  cmd.add_option("--config", args.config_path, "Flat JSON config file");
  cmd.add_option("--set", args.overrides, "key=value config override (repeatable)");
  cmd.add_option("--out", args.out_path, "Output CSV path")->required();
}

// defaults -> condition switches -> config file -> --set overrides ->
// explicit --population; validated before anything runs.
WorldConfig build_config(const CommonArgs& args, const ConditionSwitches* switches) {
  WorldConfig cfg;
  if (switches != nullptr) {
    cfg.etype = switches->etype;
    cfg.learning_enabled = switches->learning_enabled;
    cfg.exemplars_enabled = switches->exemplars_enabled;
  }
  if (!args.config_path.empty()) cfg = load_config_file(cfg, args.config_path);
  for (const std::string& assignment : args.overrides) {
    apply_override(cfg, assignment);
  }
  cfg.population = args.population;
  cfg.validate();
  return cfg;
}

std::vector<Condition> parse_condition_list(const std::string& text) {
  if (text == "all") {
    return {kAllConditions.begin(), kAllConditions.end()};
  }
  std::vector<Condition> conditions;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::string token = text.substr(
        start, comma == std::string::npos ? std::string::npos : comma - start);
    const auto condition = parse_condition(token);
    if (!condition) {
      throw ConfigError("unknown condition '" + token +
                        "' (expected nl|s|s+e|pb|pb+e|ss|ss+e)");
    }
    conditions.push_back(*condition);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return conditions;
}

int run_simulate(const CommonArgs& args, const std::string& condition_text,
                 const std::string& svg_path) {
  const auto condition = parse_condition(condition_text);
  if (!condition) {
    throw ConfigError("unknown condition '" + condition_text +
                      "' (expected nl|s|s+e|pb|pb+e|ss|ss+e)");
  }
  const ConditionSwitches switches = switches_for(*condition);
  const WorldConfig cfg = build_config(args, &switches);
  const std::vector<TelemetryRow> rows = run_config(cfg, args.iterations, args.seed);
  write_telemetry_csv(args.out_path, rows);
  if (!svg_path.empty()) render_svg(svg_path, rows);
  return 0;
}

int run_experiment(const CommonArgs& args, const std::string& conditions_text,
                   int repeats) {
  const std::vector<Condition> conditions = parse_condition_list(conditions_text);
  const WorldConfig base = build_config(args, nullptr);
  const std::vector<SummaryRow> summaries =
      run_suite(conditions, repeats, args.iterations, args.population, args.seed,
                base);
  write_summary_csv(args.out_path, summaries);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"BridgeWorld virtuous-agent simulator"};
  app.require_subcommand(1);

  CommonArgs sim_args;
  std::string sim_condition;
  std::string svg_path;
  CLI::App* simulate = app.add_subcommand(
      "simulate", "Run one condition and write per-iteration telemetry");
  simulate->add_option("--condition", sim_condition, "nl|s|s+e|pb|pb+e|ss|ss+e")
      ->required();
  add_common_options(*simulate, sim_args);
  simulate->add_option("--svg", svg_path, "Also render a trend chart");

  CommonArgs exp_args;
  std::string conditions_text = "all";
  int repeats = 10;
  CLI::App* experiment = app.add_subcommand(
      "experiment", "Run repeated simulations and write per-condition summaries");
  experiment->add_option("--conditions", conditions_text, "all or a comma list")
      ->capture_default_str();
  experiment->add_option("--repeats", repeats, "Runs per condition")
      ->capture_default_str();
  add_common_options(*experiment, exp_args);

  try {
    app.parse(argc, argv);
    if (simulate->parsed()) return run_simulate(sim_args, sim_condition, svg_path);
    return run_experiment(exp_args, conditions_text, repeats);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? 0 : 1;
  } catch (const bridgeworld::IoError& err) {
    std::cerr << "error: " << err.what() << '\n';
    return 2;
  } catch (const bridgeworld::ConfigError& err) {
    std::cerr << "error: " << err.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& err) {
    std::cerr << "error: " << err.what() << '\n';
    return 1;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << '\n';
    return 1;
  }
}
