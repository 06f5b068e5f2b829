#include "safevo/simulate.hpp"

#include "safevo/errors.hpp"

namespace safevo {

namespace {

struct Episode {
  const ControllerFsm& fsm;
  const BenchmarkTask& task;
  Wiring wiring;

  template <typename OnStep>
  void run(StateId start, std::size_t steps, Rng& rng, OnStep&& on_step) const {
    const Plant& plant = task.plant;
    StateId p = start;
    StateId c = fsm.initial;
    for (std::size_t t = 0; t < steps; ++t) {
      const SymbolId sensor = plant.emit[p];
      const SymbolId in = wiring.sensor_to_input[sensor];
      const SymbolId out = fsm.output(c, in);
      const auto succ = plant.next(p, wiring.output_to_actuator[out]);
      const StateId p_next = succ[rng.below(succ.size())];
      on_step(SimulationStep{t, p, sensor, c, out, p_next, task.reward[p_next]});
      c = fsm.next_state(c, in);
      p = p_next;
    }
  }
};

}  // namespace

std::vector<SimulationStep> simulate_episode(const ControllerFsm& fsm, const BenchmarkTask& task,
                                             std::size_t steps, Rng& rng,
                                             std::optional<StateId> start) {
  Episode e{fsm, task, wire(fsm, task.plant)};
  const auto& initial = task.plant.initial;
  if (start && *start >= task.plant.state_count())
    throw UsageError("start state out of range");
  const StateId from = start ? *start : initial[rng.below(initial.size())];
  std::vector<SimulationStep> out;
  out.reserve(steps);
  e.run(from, steps, rng, [&](const SimulationStep& s) { out.push_back(s); });
  return out;
}

double mean_episode_reward(const ControllerFsm& fsm, const BenchmarkTask& task,
                           std::size_t episodes, std::size_t length, Rng& rng) {
  if (episodes == 0 || length == 0) return 0.0;
  Episode e{fsm, task, wire(fsm, task.plant)};
  double total = 0.0;
  for (std::size_t i = 0; i < episodes; ++i)
    e.run(task.plant.initial[i % task.plant.initial.size()], length, rng, [&](const SimulationStep& s) { total += s.reward; });
  return total / static_cast<double>(episodes * length);
}

}  // namespace safevo
