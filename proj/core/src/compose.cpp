#include "safevo/compose.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <string>
#include <unordered_map>

#include "safevo/errors.hpp"

namespace safevo {

namespace {

std::string join(const std::set<std::string>& names) {
  std::string out;
  for (const auto& n : names) {
    if (!out.empty()) out += ' ';
    out += n;
  }
  return out;
}

void require_same_symbols(const std::vector<std::string>& expected,
                          const std::vector<std::string>& actual, const char* what) {
  std::set<std::string> want(expected.begin(), expected.end());
  std::set<std::string> have(actual.begin(), actual.end());
  if (want == have) return;
  std::set<std::string> missing, extra;
  std::set_difference(want.begin(), want.end(), have.begin(), have.end(),
                      std::inserter(missing, missing.end()));
  std::set_difference(have.begin(), have.end(), want.begin(), want.end(),
                      std::inserter(extra, extra.end()));
  std::string msg = std::string("alphabet mismatch on ") + what + ":";
  if (!missing.empty()) msg += " missing {" + join(missing) + "}";
  if (!extra.empty()) msg += " extra {" + join(extra) + "}";
  throw CompositionError(msg);
}

void require_valid(const ValidationReport& r, const char* what) {
  if (!r.ok()) throw UsageError(std::string("invalid ") + what + ": " + r.violations.front());
}

}  // namespace

Wiring wire(const ControllerFsm& controller, const Plant& plant) {
  // Reported from the controller's side: "missing" is what the plant needs.
  require_same_symbols(plant.inputs, controller.outputs, "controller outputs / plant inputs");
  require_same_symbols(plant.outputs, controller.inputs, "controller inputs / plant outputs");
  Wiring w;
  w.sensor_to_input.resize(plant.outputs.size());
  for (SymbolId i = 0; i < plant.outputs.size(); ++i)
    w.sensor_to_input[i] = *index_of(controller.inputs, plant.outputs[i]);
  w.output_to_actuator.resize(controller.outputs.size());
  for (SymbolId i = 0; i < controller.outputs.size(); ++i)
    w.output_to_actuator[i] = *index_of(plant.inputs, controller.outputs[i]);
  return w;
}

ClosedLoopSystem compose(const ControllerFsm& controller, const Plant& plant) {
  require_valid(validate_controller(controller), "controller");
  require_valid(validate_plant(plant), "plant");
  const Wiring w = wire(controller, plant);

  const std::size_t plant_n = plant.state_count();
  std::unordered_map<std::uint64_t, StateId> index;
  std::vector<ProductState> pairs;
  std::deque<StateId> queue;
  auto intern = [&](ProductState ps) {
    const std::uint64_t key = std::uint64_t{ps.controller} * plant_n + ps.plant;
    auto [it, fresh] = index.try_emplace(key, static_cast<StateId>(pairs.size()));
    if (fresh) {
      pairs.push_back(ps);
      queue.push_back(it->second);
    }
    return it->second;
  };

  std::vector<StateId> initial;
  for (StateId p : plant.initial) initial.push_back(intern({controller.initial, p}));

  std::vector<Edge> edges;
  while (!queue.empty()) {
    const StateId from = queue.front();
    queue.pop_front();
    const ProductState ps = pairs[from];
    const SymbolId in = w.sensor_to_input[plant.emit[ps.plant]];
    const StateId c_next = controller.next_state(ps.controller, in);
    const SymbolId act = w.output_to_actuator[controller.output(ps.controller, in)];
    for (StateId p_next : plant.next(ps.plant, act)) edges.emplace_back(from, intern({c_next, p_next}));
  }

  std::map<std::string, std::vector<StateId>> labels;
  for (const auto& [prop, members] : plant.hazards) {
    std::vector<bool> hazardous(plant_n, false);
    for (StateId s : members) hazardous[s] = true;
    auto& lifted = labels[prop];
    for (StateId s = 0; s < pairs.size(); ++s)
      if (hazardous[pairs[s].plant]) lifted.push_back(s);
  }

  ClosedLoopSystem sys;
  sys.graph = TransitionSystem(pairs.size(), initial, std::move(edges), labels);
  sys.pairs = std::move(pairs);
  return sys;
}

TransitionSystem controller_graph(const ControllerFsm& controller) {
  require_valid(validate_controller(controller), "controller");
  std::vector<Edge> edges;
  std::map<std::string, std::vector<StateId>> labels;
  for (const auto& o : controller.outputs) labels[o];
  for (StateId s = 0; s < controller.state_count(); ++s) {
    for (SymbolId a = 0; a < controller.input_count(); ++a) {
      edges.emplace_back(s, controller.next_state(s, a));
      auto& members = labels[controller.outputs[controller.output(s, a)]];
      if (members.empty() || members.back() != s) members.push_back(s);
    }
  }
  return TransitionSystem(controller.state_count(), {controller.initial}, std::move(edges), labels);
}

}  // namespace safevo
