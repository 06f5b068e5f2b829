#include "safevo/tasks.hpp"

#include "safevo/embedded_tasks.hpp"
#include "safevo/errors.hpp"
#include "safevo/fsm_text.hpp"

namespace safevo {

BenchmarkTask make_task(std::string name, Plant plant, SafetyProperty property,
                        std::vector<double> reward, std::optional<ControllerFsm> reference) {
  if (auto report = validate_plant(plant); !report.ok())
    throw UsageError("task '" + name + "': " + report.violations.front());
  if (reward.size() != plant.state_count())
    throw UsageError("task '" + name + "': reward table does not cover every plant state");
  for (double r : reward)
    if (!(r >= 0.0 && r <= 1.0)) throw UsageError("task '" + name + "': reward outside [0, 1]");
  for (const auto& atom : property.atoms())
    if (!plant.hazards.count(atom))
      throw UsageError("task '" + name + "': property atom '" + atom + "' is not a hazard label");
  return BenchmarkTask{std::move(name), std::move(plant), std::move(property), std::move(reward),
                       std::move(reference)};
}

namespace {

BenchmarkTask tank() {
  Plant plant = parse_plant(embedded::kTankPlant);
  std::vector<double> reward(plant.state_count(), 0.0);
  for (const char* level : {"l4", "l5", "l6"}) reward[*index_of(plant.states, level)] = 1.0;
  return make_task("tank", std::move(plant), parse_property("AG !(overflow | underflow)"),
                   std::move(reward), parse_controller(embedded::kTankReference));
}

BenchmarkTask rover() {
  Plant plant = parse_plant(embedded::kRoverPlant);
  std::vector<double> reward(plant.state_count(), 0.0);
  reward[*index_of(plant.states, "r3c0")] = 1.0;
  return make_task("rover", std::move(plant), parse_property("AG !crater"), std::move(reward),
                   parse_controller(embedded::kRoverReference));
}

}  // namespace

BenchmarkTask builtin_task(std::string_view name) {
  if (name == "tank") return tank();
  if (name == "rover") return rover();
  throw UsageError("unknown task '" + std::string(name) + "' (expected tank or rover)");
}

std::vector<std::string> builtin_task_names() { return {"tank", "rover"}; }

std::optional<BenchmarkTask> match_builtin(const Plant& plant) {
  for (const auto& name : builtin_task_names()) {
    BenchmarkTask t = builtin_task(name);
    if (t.plant == plant) return t;
  }
  return std::nullopt;
}

double reward_of(const BenchmarkTask& task, StateId plant_state) {
  if (plant_state >= task.reward.size())
    throw UsageError("unknown plant state index " + std::to_string(plant_state));
  return task.reward[plant_state];
}

double reward_of(const BenchmarkTask& task, std::string_view plant_state) {
  auto idx = index_of(task.plant.states, plant_state);
  if (!idx) throw UsageError("unknown plant state '" + std::string(plant_state) + "'");
  return task.reward[*idx];
}

}  // namespace safevo
