#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "safevo/compose.hpp"
#include "safevo/rng.hpp"
#include "safevo/tasks.hpp"

namespace safevo {

// One closed-loop step. States and symbols are the values before the step;
// `reward` is earned by the plant state the step lands in.
struct SimulationStep {
  std::size_t index;
  StateId plant_state;
  SymbolId sensor;
  StateId controller_state;
  SymbolId actuator;
  StateId next_plant_state;
  double reward;
};

/// Runs one episode. Each nondeterministic move is drawn uniformly from the
/// successor list through `rng`; so is the start state unless `start` is
/// given. Throws CompositionError on alphabet mismatch.
std::vector<SimulationStep> simulate_episode(const ControllerFsm& fsm, const BenchmarkTask& task,
                                             std::size_t steps, Rng& rng,
                                             std::optional<StateId> start = std::nullopt);

// Mean per-step reward over `episodes` episodes of `length` steps. Episode i
// starts in initial state i mod |initial|; moves come from `rng` in order.
double mean_episode_reward(const ControllerFsm& fsm, const BenchmarkTask& task,
                           std::size_t episodes, std::size_t length, Rng& rng);

}  // namespace safevo
