#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "safevo/machine.hpp"
#include "safevo/property.hpp"

namespace safevo {

/// A plant together with its default safety property and per-state reward.
struct BenchmarkTask {
  std::string name;
  Plant plant;
  SafetyProperty default_property;
  std::vector<double> reward;  // indexed by plant state, each in [0, 1]
  std::optional<ControllerFsm> reference_controller;
};

// Checks the task invariants (valid plant, full reward table in range,
// property atoms are hazard labels); throws UsageError otherwise.
BenchmarkTask make_task(std::string name, Plant plant, SafetyProperty property,
                        std::vector<double> reward,
                        std::optional<ControllerFsm> reference = std::nullopt);

// "tank" or "rover". Throws UsageError for any other name.
BenchmarkTask builtin_task(std::string_view name);
std::vector<std::string> builtin_task_names();

// The builtin task whose plant is identical to `plant`, if any.
std::optional<BenchmarkTask> match_builtin(const Plant& plant);

double reward_of(const BenchmarkTask& task, StateId plant_state);
double reward_of(const BenchmarkTask& task, std::string_view plant_state);

}  // namespace safevo
