#include "safevo/config.hpp"

#include <cmath>
#include <set>

#include "safevo/errors.hpp"

namespace safevo {

using nlohmann::json;

const char* to_string(Mutation m) noexcept {
  switch (m) {
    case Mutation::AddState: return "add_state";
    case Mutation::DeleteState: return "delete_state";
    case Mutation::ChangeTransition: return "change_transition";
    case Mutation::ChangeOutput: return "change_output";
    case Mutation::ChangeInitial: return "change_initial";
  }
  return "?";
}

double MutationWeights::operator[](Mutation m) const noexcept {
  switch (m) {
    case Mutation::AddState: return add_state;
    case Mutation::DeleteState: return delete_state;
    case Mutation::ChangeTransition: return change_transition;
    case Mutation::ChangeOutput: return change_output;
    case Mutation::ChangeInitial: return change_initial;
  }
  return 0.0;
}

void validate(const EvolutionConfig& cfg) {
  auto positive = [](std::size_t v, const char* key) {
    if (v == 0) throw ConfigError(std::string(key) + " must be positive");
  };
  positive(cfg.population_size, "population_size");
  positive(cfg.offspring_per_parent, "offspring_per_parent");
  positive(cfg.max_generations, "max_generations");
  positive(cfg.max_states, "max_states");
  positive(cfg.episodes_per_evaluation, "episodes_per_evaluation");
  positive(cfg.episode_length, "episode_length");
  if (std::isnan(cfg.fitness_threshold)) throw ConfigError("fitness_threshold must be a number");
  bool any_positive = false;
  for (Mutation m : kAllMutations) {
    const double w = cfg.mutation_weights[m];
    if (!(w >= 0.0) || std::isinf(w))
      throw ConfigError(std::string("mutation weight ") + to_string(m) + " must be finite and non-negative");
    any_positive = any_positive || w > 0.0;
  }
  if (!any_positive) throw ConfigError("at least one mutation weight must be positive");
  if (cfg.initial_states && (*cfg.initial_states == 0 || *cfg.initial_states > cfg.max_states))
    throw ConfigError("initial_states must lie in [1, max_states]");
}

namespace {

std::size_t as_count(const json& v, const std::string& key) {
  if (!v.is_number_integer() || (!v.is_number_unsigned() && v.get<std::int64_t>() < 0))
    throw ConfigError(key + " must be a non-negative integer");
  return v.get<std::size_t>();
}

double as_real(const json& v, const std::string& key) {
  if (!v.is_number()) throw ConfigError(key + " must be a number");
  return v.get<double>();
}

std::string as_text(const json& v, const std::string& key) {
  if (!v.is_string()) throw ConfigError(key + " must be a string");
  return v.get<std::string>();
}

MutationWeights parse_weights(const json& v) {
  if (!v.is_object()) throw ConfigError("mutation_weights must be an object");
  MutationWeights w;
  for (const auto& [key, value] : v.items()) {
    const std::string path = "mutation_weights." + key;
    if (key == "add_state") w.add_state = as_real(value, path);
    else if (key == "delete_state") w.delete_state = as_real(value, path);
    else if (key == "change_transition") w.change_transition = as_real(value, path);
    else if (key == "change_output") w.change_output = as_real(value, path);
    else if (key == "change_initial") w.change_initial = as_real(value, path);
    else throw ConfigError("unknown mutation weight '" + key + "'");
  }
  return w;
}

}  // namespace

RunConfig parse_run_config(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("config must be a JSON object");

  RunConfig rc;
  EvolutionConfig& cfg = rc.evolution;
  for (const auto& [key, v] : doc.items()) {
    if (key == "population_size") cfg.population_size = as_count(v, key);
    else if (key == "offspring_per_parent") cfg.offspring_per_parent = as_count(v, key);
    else if (key == "max_generations") cfg.max_generations = as_count(v, key);
    else if (key == "fitness_threshold") cfg.fitness_threshold = as_real(v, key);
    else if (key == "max_states") cfg.max_states = as_count(v, key);
    else if (key == "mutation_weights") cfg.mutation_weights = parse_weights(v);
    else if (key == "episodes_per_evaluation") cfg.episodes_per_evaluation = as_count(v, key);
    else if (key == "episode_length") cfg.episode_length = as_count(v, key);
    else if (key == "seed") cfg.seed = as_count(v, key);
    else if (key == "initial_states") cfg.initial_states = as_count(v, key);
    else if (key == "task") rc.task = as_text(v, key);
    else if (key == "plant") rc.plant = as_text(v, key);
    else if (key == "property") rc.property = as_text(v, key);
    else if (key == "property_file") rc.property_file = as_text(v, key);
    else if (key == "log") rc.log = as_text(v, key);
    else if (key == "best_genome") rc.best_genome = as_text(v, key);
    else if (key == "seed_genome") rc.seed_genome = as_text(v, key);
    else if (key == "reward") {
      if (!v.is_object()) throw ConfigError("reward must be an object of state -> value");
      for (const auto& [state, r] : v.items()) rc.reward[state] = as_real(r, "reward." + state);
    } else {
      throw ConfigError("unknown config key '" + key + "'");
    }
  }
  return rc;
}

json to_json(const EvolutionConfig& cfg) {
  const auto& w = cfg.mutation_weights;
  json j = {
      {"population_size", cfg.population_size},
      {"offspring_per_parent", cfg.offspring_per_parent},
      {"max_generations", cfg.max_generations},
      {"fitness_threshold", cfg.fitness_threshold},
      {"max_states", cfg.max_states},
      {"mutation_weights",
       {{"add_state", w.add_state},
        {"delete_state", w.delete_state},
        {"change_transition", w.change_transition},
        {"change_output", w.change_output},
        {"change_initial", w.change_initial}}},
      {"episodes_per_evaluation", cfg.episodes_per_evaluation},
      {"episode_length", cfg.episode_length},
      {"seed", cfg.seed},
  };
  j["initial_states"] = cfg.initial_states ? json(*cfg.initial_states) : json(nullptr);
  return j;
}

json to_json(const RunConfig& rc) {
  json j = to_json(rc.evolution);
  auto put = [&](const char* key, const std::optional<std::string>& v) {
    if (v) j[key] = *v;
  };
  put("task", rc.task);
  put("plant", rc.plant);
  put("property", rc.property);
  put("property_file", rc.property_file);
  put("log", rc.log);
  put("best_genome", rc.best_genome);
  put("seed_genome", rc.seed_genome);
  if (!rc.reward.empty()) j["reward"] = rc.reward;
  return j;
}

}  // namespace safevo
