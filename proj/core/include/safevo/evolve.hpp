#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "safevo/checker.hpp"
#include "safevo/config.hpp"
#include "safevo/machine.hpp"
#include "safevo/property.hpp"
#include "safevo/rng.hpp"
#include "safevo/tasks.hpp"

namespace safevo {

struct Lineage {
  std::size_t generation = 0;
  std::size_t index = 0;                // position among the generation's new candidates
  std::optional<std::size_t> parent;    // rank of the parent in the previous population
  std::string origin;                   // "random", "seed", or the mutation applied
};

/// Invariant: fitness is present only when verdict is Safe.
struct Candidate {
  ControllerFsm genome;
  std::optional<SafetyVerdict> verdict;
  std::optional<double> fitness;
  Lineage lineage;

  bool safe() const noexcept { return verdict && verdict->safe(); }
};

struct GenerationStats {
  std::size_t generation = 0;
  std::size_t offspring_created = 0;
  // Unsafe candidates of this generation. In generation 0 these are initial
  // members kept with bottom fitness until displaced.
  std::size_t offspring_unsafe_discarded = 0;
  std::size_t evaluations = 0;
  std::optional<double> best_fitness;  // absent while no member is safe
  std::optional<double> mean_fitness;  // over members with a fitness
  double wall_seconds = 0.0;
};

struct EvolutionResult {
  std::optional<Candidate> best;      // best safe candidate ever evaluated
  std::vector<GenerationStats> history;
  std::vector<Candidate> candidates;  // every candidate, in creation order
  std::size_t evaluations = 0;

  bool no_safe_strategy() const noexcept { return !best.has_value(); }
};

struct RunOptions {
  std::optional<ControllerFsm> seed_genome;
  // Worker threads for checking and evaluating the children of one
  // generation. Results do not depend on it.
  unsigned jobs = 1;
};

// Mean per-step reward of `fsm` over cfg.episodes_per_evaluation episodes.
double evaluate(const ControllerFsm& fsm, const BenchmarkTask& task, const EvolutionConfig& cfg,
                Rng& rng);

// Composes with the task plant and runs check_safe().
SafetyVerdict gate(const ControllerFsm& fsm, const BenchmarkTask& task, const SafetyProperty& prop);

/// Evolutionary programming with a safety gate.
///
/// Generation 0 is cfg.population_size random machines (slot 0 replaced by
/// the seed genome when given). Each later generation mutates every parent
/// cfg.offspring_per_parent times, discards children the checker rejects,
/// evaluates the rest, and keeps the best population_size of parents plus
/// surviving children (stable sort, parents first on ties). The loop stops
/// after cfg.max_generations generations or once the best fitness reaches
/// cfg.fitness_threshold.
///
/// Streams: every candidate draws from derive_seed(cfg.seed, {generation,
/// parent, child, purpose}), so results are independent of `jobs`.
EvolutionResult run_evolution(const EvolutionConfig& cfg, const BenchmarkTask& task,
                              const SafetyProperty& prop, const RunOptions& options = {});

}  // namespace safevo
