#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

namespace safevo {

enum class Mutation { AddState, DeleteState, ChangeTransition, ChangeOutput, ChangeInitial };

inline constexpr std::array<Mutation, 5> kAllMutations = {
    Mutation::AddState, Mutation::DeleteState, Mutation::ChangeTransition, Mutation::ChangeOutput,
    Mutation::ChangeInitial};

const char* to_string(Mutation m) noexcept;

struct MutationWeights {
  double add_state = 1.0;
  double delete_state = 1.0;
  double change_transition = 2.0;
  double change_output = 2.0;
  double change_initial = 1.0;

  double operator[](Mutation m) const noexcept;
  friend bool operator==(const MutationWeights&, const MutationWeights&) = default;
};

struct EvolutionConfig {
  std::size_t population_size = 20;
  std::size_t offspring_per_parent = 1;
  std::size_t max_generations = 200;
  double fitness_threshold = 1.0;
  std::size_t max_states = 6;
  MutationWeights mutation_weights;
  std::size_t episodes_per_evaluation = 8;
  std::size_t episode_length = 50;
  std::uint64_t seed = 0;
  // State count of the random initial genomes; uniform over [1, max_states]
  // when unset.
  std::optional<std::size_t> initial_states;

  friend bool operator==(const EvolutionConfig&, const EvolutionConfig&) = default;
};

// Throws ConfigError describing the first violated constraint.
void validate(const EvolutionConfig& cfg);

/// Everything an `evolve` run needs besides the evolution parameters.
struct RunConfig {
  EvolutionConfig evolution;
  std::optional<std::string> task;           // builtin task name
  std::optional<std::string> plant;          // path to a plant file
  std::optional<std::string> property;       // inline property text
  std::optional<std::string> property_file;  // path to a property file
  std::optional<std::string> log;            // run log output path
  std::optional<std::string> best_genome;    // best genome output path
  std::optional<std::string> seed_genome;    // path to a warm-start controller
  std::map<std::string, double> reward;      // per plant state, custom plants only
};

// Parses a flat JSON object. Unknown keys and wrongly typed values throw
// ConfigError; range checks are left to validate().
RunConfig parse_run_config(std::string_view json_text);

nlohmann::json to_json(const EvolutionConfig& cfg);
nlohmann::json to_json(const RunConfig& cfg);

}  // namespace safevo
