#include "safevo/machine.hpp"

#include <algorithm>
#include <set>

#include "safevo/errors.hpp"

namespace safevo {

std::optional<std::uint32_t> index_of(const std::vector<std::string>& names, std::string_view name) {
  auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) return std::nullopt;
  return static_cast<std::uint32_t>(it - names.begin());
}

ControllerFsm ControllerFsm::blank(std::string name, std::vector<std::string> inputs,
                                   std::vector<std::string> outputs,
                                   std::vector<std::string> states) {
  ControllerFsm m;
  m.name = std::move(name);
  m.inputs = std::move(inputs);
  m.outputs = std::move(outputs);
  m.states = std::move(states);
  m.next.assign(m.states.size() * m.inputs.size(), kNoState);
  m.emit.assign(m.states.size() * m.inputs.size(), kNoSymbol);
  return m;
}

Plant Plant::blank(std::string name, std::vector<std::string> inputs,
                   std::vector<std::string> outputs, std::vector<std::string> states) {
  Plant p;
  p.name = std::move(name);
  p.inputs = std::move(inputs);
  p.outputs = std::move(outputs);
  p.states = std::move(states);
  p.emit.assign(p.states.size(), kNoSymbol);
  p.successors.assign(p.states.size() * p.inputs.size(), {});
  return p;
}

bool Plant::add_transition(StateId from, SymbolId input, StateId to) {
  auto& row = successors[slot(from, input)];
  auto it = std::lower_bound(row.begin(), row.end(), to);
  if (it != row.end() && *it == to) return false;
  row.insert(it, to);
  return true;
}

namespace {

void check_names(const std::vector<std::string>& names, const char* what,
                 std::vector<std::string>& out) {
  if (names.empty()) out.push_back(std::string("empty ") + what);
  std::set<std::string_view> seen;
  for (const auto& n : names)
    if (!seen.insert(n).second)
      out.push_back(std::string("duplicate symbol '") + n + "' in " + what);
}

}  // namespace

ValidationReport validate_controller(const ControllerFsm& fsm) {
  ValidationReport r;
  check_names(fsm.inputs, "inputs", r.violations);
  check_names(fsm.outputs, "outputs", r.violations);
  check_names(fsm.states, "states", r.violations);

  if (fsm.initial >= fsm.state_count())
    r.violations.push_back("initial state is not a member of states");

  const std::size_t cells = fsm.state_count() * fsm.input_count();
  if (fsm.next.size() != cells || fsm.emit.size() != cells) {
    r.violations.push_back("transition table size does not match states x inputs");
    return r;
  }
  for (StateId s = 0; s < fsm.state_count(); ++s) {
    for (SymbolId a = 0; a < fsm.input_count(); ++a) {
      const StateId to = fsm.next_state(s, a);
      const SymbolId out = fsm.output(s, a);
      const std::string where = "(" + fsm.states[s] + "," + fsm.inputs[a] + ")";
      if (to == kNoState || out == kNoSymbol)
        r.violations.push_back("incomplete at " + where);
      else if (to >= fsm.state_count() || out >= fsm.output_count())
        r.violations.push_back("out-of-range entry at " + where);
    }
  }
  return r;
}

ValidationReport validate_plant(const Plant& plant) {
  ValidationReport r;
  check_names(plant.inputs, "inputs", r.violations);
  check_names(plant.outputs, "outputs", r.violations);
  check_names(plant.states, "states", r.violations);

  if (plant.initial.empty()) r.violations.push_back("no initial state");
  for (StateId s : plant.initial)
    if (s >= plant.state_count()) r.violations.push_back("initial state out of range");

  if (plant.emit.size() != plant.state_count() ||
      plant.successors.size() != plant.state_count() * plant.inputs.size()) {
    r.violations.push_back("transition table size does not match states x inputs");
    return r;
  }
  for (StateId s = 0; s < plant.state_count(); ++s) {
    if (plant.emit[s] == kNoSymbol)
      r.violations.push_back("no emit for state " + plant.states[s]);
    else if (plant.emit[s] >= plant.outputs.size())
      r.violations.push_back("emit out of range at state " + plant.states[s]);
    for (SymbolId a = 0; a < plant.inputs.size(); ++a) {
      auto succ = plant.next(s, a);
      if (succ.empty())
        r.violations.push_back("not input-enabled at (" + plant.states[s] + "," + plant.inputs[a] + ")");
      for (StateId t : succ)
        if (t >= plant.state_count())
          r.violations.push_back("successor out of range at (" + plant.states[s] + "," +
                                 plant.inputs[a] + ")");
    }
  }
  for (const auto& [prop, members] : plant.hazards)
    for (StateId s : members)
      if (s >= plant.state_count())
        r.violations.push_back("hazard '" + prop + "' names a state out of range");
  return r;
}

StepResult step(const ControllerFsm& fsm, StateId state, std::string_view input) {
  if (state >= fsm.state_count())
    throw UsageError("unknown state index " + std::to_string(state));
  auto in = index_of(fsm.inputs, input);
  if (!in) throw UsageError("unknown input symbol '" + std::string(input) + "'");
  const StateId to = fsm.next_state(state, *in);
  const SymbolId out = fsm.output(state, *in);
  if (to == kNoState || out == kNoSymbol)
    throw UsageError("no transition at (" + fsm.states[state] + "," + std::string(input) + ")");
  return {to, fsm.outputs[out]};
}

}  // namespace safevo
