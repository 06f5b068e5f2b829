#include "commands.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>

#include "safevo/checker.hpp"
#include "safevo/compose.hpp"
#include "safevo/errors.hpp"
#include "safevo/evolve.hpp"
#include "safevo/fsm_text.hpp"
#include "safevo/hash.hpp"
#include "safevo/run_log.hpp"
#include "safevo/simulate.hpp"
#include "safevo/tasks.hpp"

namespace safevo::cli {

namespace fs = std::filesystem;

namespace {

struct Globals {
  std::optional<std::uint64_t> seed;
  std::optional<std::string> log;
  bool quiet = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out || !(out << text)) throw UsageError("cannot write '" + path + "'");
}

std::string trim(std::string s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  return s.substr(first, s.find_last_not_of(" \t\r\n") - first + 1);
}

// Reward table for a plant: the builtin one when the plant is a builtin,
// otherwise zero everywhere except the given overrides.
BenchmarkTask task_for(Plant plant, std::optional<SafetyProperty> property,
                       const std::map<std::string, double>& reward_overrides) {
  auto builtin = match_builtin(plant);
  if (builtin && reward_overrides.empty()) {
    if (property) builtin->default_property = *property;
    return *builtin;
  }
  // Overrides on a builtin plant start from its reward table.
  std::vector<double> reward = builtin ? builtin->reward : std::vector<double>(plant.state_count(), 0.0);
  if (!property && builtin) property = builtin->default_property;
  for (const auto& [state, value] : reward_overrides) {
    auto idx = index_of(plant.states, state);
    if (!idx) throw ConfigError("reward names unknown plant state '" + state + "'");
    reward[*idx] = value;
  }
  if (!property) throw UsageError("no property given and plant '" + plant.name + "' is not a builtin task");
  std::string name = plant.name;
  return make_task(std::move(name), std::move(plant), *property, std::move(reward));
}

int cmd_validate(const std::string& path, std::ostream& out) {
  Machine m = parse_fsm(read_file(path));
  const ValidationReport report = std::visit(
      [](const auto& machine) {
        if constexpr (std::is_same_v<std::decay_t<decltype(machine)>, ControllerFsm>)
          return validate_controller(machine);
        else
          return validate_plant(machine);
      },
      m);
  for (const auto& v : report.violations) out << v << '\n';
  return report.ok() ? kOk : kError;
}

struct CheckArgs {
  std::string controller;
  std::string plant;
  bool alone = false;
  std::string property;
  std::string property_file;
};

std::optional<SafetyProperty> resolve_property(const std::string& inline_text, const std::string& file) {
  if (!inline_text.empty()) return parse_property(inline_text);
  if (!file.empty()) return parse_property(trim(read_file(file)));
  return std::nullopt;
}

int cmd_check(const CheckArgs& a, const Globals& g, std::ostream& out, std::ostream& err) {
  const ControllerFsm fsm = parse_controller(read_file(a.controller));
  if (auto report = validate_controller(fsm); !report.ok())
    throw UsageError("invalid controller: " + report.violations.front());
  auto property = resolve_property(a.property, a.property_file);

  SafetyVerdict verdict;
  if (a.alone) {
    if (!property) throw UsageError("--alone needs --property or --property-file");
    verdict = check_controller_alone(fsm, *property);
  } else {
    if (a.plant.empty()) throw UsageError("check needs a plant file or --alone");
    BenchmarkTask task = task_for(parse_plant(read_file(a.plant)), property, {});
    verdict = check_safe(compose(fsm, task.plant), task.default_property);
  }
  out << to_string(verdict.value) << '\n';
  if (!g.quiet)
    err << "iterations=" << verdict.iterations << " states_flagged=" << verdict.states_flagged << '\n';
  return verdict.safe() ? kOk : kUnsafe;
}

struct SimulateArgs {
  std::string controller;
  std::string plant;
  std::size_t steps = 20;
  std::vector<std::string> rewards;
};

int cmd_simulate(const SimulateArgs& a, const Globals& g, std::ostream& out) {
  const ControllerFsm fsm = parse_controller(read_file(a.controller));
  if (auto report = validate_controller(fsm); !report.ok())
    throw UsageError("invalid controller: " + report.violations.front());
  Plant plant = parse_plant(read_file(a.plant));
  std::map<std::string, double> overrides;
  for (const auto& r : a.rewards) {
    const auto eq = r.find('=');
    if (eq == std::string::npos) throw UsageError("--reward expects state=value, got '" + r + "'");
    try {
      overrides[r.substr(0, eq)] = std::stod(r.substr(eq + 1));
    } catch (const std::exception&) {
      throw UsageError("--reward value is not a number in '" + r + "'");
    }
  }
  // The property is irrelevant here; a constant keeps task_for happy.
  BenchmarkTask task = task_for(std::move(plant), parse_property("AG true"), overrides);
  wire(fsm, task.plant);

  Rng rng(g.seed.value_or(0));
  const auto steps = simulate_episode(fsm, task, a.steps, rng);
  double total = 0.0;
  out << std::fixed << std::setprecision(6);
  for (const auto& s : steps) {
    out << s.index << ' ' << task.plant.states[s.plant_state] << ' ' << task.plant.outputs[s.sensor]
        << ' ' << fsm.states[s.controller_state] << ' ' << fsm.outputs[s.actuator] << ' ' << s.reward
        << '\n';
    total += s.reward;
  }
  const double mean = steps.empty() ? 0.0 : total / static_cast<double>(steps.size());
  out << "mean_reward " << mean << '\n';
  return kOk;
}

int cmd_evolve(const std::string& config_path, unsigned jobs, const Globals& g, std::ostream& err) {
  const std::string start_time = utc_timestamp();
  RunConfig rc = parse_run_config(read_file(config_path));
  if (g.seed) rc.evolution.seed = *g.seed;
  if (g.log) rc.log = *g.log;
  validate(rc.evolution);

  // Relative paths inside the config are relative to the config file.
  const fs::path base = fs::path(config_path).parent_path();
  auto resolve = [&](const std::string& p) { return fs::path(p).is_absolute() ? p : (base / p).string(); };

  if (rc.task.has_value() == rc.plant.has_value())
    throw ConfigError("config needs exactly one of 'task' and 'plant'");
  std::optional<SafetyProperty> property;
  if (rc.property) property = parse_property(*rc.property);
  else if (rc.property_file) property = parse_property(trim(read_file(resolve(*rc.property_file))));

  BenchmarkTask task = [&] {
    if (rc.task) {
      if (!rc.reward.empty()) throw ConfigError("reward only applies to custom plants");
      BenchmarkTask t = builtin_task(*rc.task);
      if (property) t.default_property = *property;
      return t;
    }
    return task_for(parse_plant(read_file(resolve(*rc.plant))), property, rc.reward);
  }();

  RunOptions options;
  options.jobs = jobs;
  if (rc.seed_genome) options.seed_genome = parse_controller(read_file(resolve(*rc.seed_genome)));

  const EvolutionResult result = run_evolution(rc.evolution, task, task.default_property, options);

  RunManifest manifest;
  manifest.tool_version = tool_version();
  manifest.config = to_json(rc);
  manifest.seed = rc.evolution.seed;
  manifest.input_hashes["plant"] = hex_digest(serialize_fsm(task.plant));
  manifest.input_hashes["property"] = hex_digest(task.default_property.to_string());
  if (options.seed_genome) manifest.input_hashes["seed_genome"] = hex_digest(serialize_fsm(*options.seed_genome));
  manifest.start_time = start_time;
  manifest.end_time = utc_timestamp();

  if (rc.log) {
    std::ostringstream log;
    write_run_log(log, manifest, result);
    // --log is relative to the working directory, a config entry to the config.
    write_file(g.log ? *g.log : resolve(*rc.log), log.str());
  }
  if (result.best && rc.best_genome) write_file(resolve(*rc.best_genome), serialize_fsm(result.best->genome));

  if (!g.quiet) {
    if (result.best)
      err << "best fitness " << *result.best->fitness << " (generation " << result.best->lineage.generation
          << "), " << result.evaluations << " evaluations\n";
    else
      err << "no safe strategy found, " << result.evaluations << " evaluations\n";
  }
  return result.best ? kOk : kNoSafeStrategy;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Evolve finite-state controllers behind a model-checking safety gate", "safevo"};
  app.require_subcommand(1);
  Globals g;
  std::uint64_t seed = 0;
  auto* seed_opt = app.add_option("--seed", seed, "Root seed (overrides the config file)");
  app.add_option("--log", g.log, "Run log path (overrides the config file)");
  app.add_flag("--quiet", g.quiet, "Suppress diagnostics on stderr");

  std::string validate_path;
  auto* validate = app.add_subcommand("validate", "Parse and validate an FSM or plant file");
  validate->add_option("path", validate_path)->required();

  CheckArgs check_args;
  auto* check = app.add_subcommand("check", "Decide whether a controller is safe");
  check->add_option("controller", check_args.controller)->required();
  check->add_option("plant", check_args.plant);
  check->add_flag("--alone", check_args.alone, "Check the controller graph over output atoms");
  check->add_option("--property", check_args.property, "Property text; wins over --property-file");
  check->add_option("--property-file", check_args.property_file);

  std::string config_path;
  unsigned jobs = 1;
  auto* evolve = app.add_subcommand("evolve", "Run evolution from a JSON config");
  evolve->add_option("config", config_path)->required();
  evolve->add_option("--jobs", jobs, "Worker threads per generation")->check(CLI::PositiveNumber);

  SimulateArgs sim_args;
  auto* simulate = app.add_subcommand("simulate", "Print a closed-loop episode transcript");
  simulate->add_option("controller", sim_args.controller)->required();
  simulate->add_option("plant", sim_args.plant)->required();
  simulate->add_option("--steps", sim_args.steps, "Episode length");
  simulate->add_option("--reward", sim_args.rewards, "state=value for custom plants (repeatable)");

  // Flags after the subcommand are accepted too.
  for (auto* sub : {validate, check, evolve, simulate}) sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kError;
  }
  if (seed_opt->count()) g.seed = seed;

  try {
    if (*validate) return cmd_validate(validate_path, out);
    if (*check) return cmd_check(check_args, g, out, err);
    if (*evolve) return cmd_evolve(config_path, jobs, g, err);
    if (*simulate) return cmd_simulate(sim_args, g, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kError;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kError;
  }
  return kError;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, out, err);
}

}  // namespace safevo::cli
