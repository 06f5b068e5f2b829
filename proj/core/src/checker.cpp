#include "safevo/checker.hpp"

#include <cassert>

#include "safevo/errors.hpp"

namespace safevo {

const char* to_string(SafetyVerdict::Value v) noexcept {
  return v == SafetyVerdict::Value::Safe ? "SAFE" : "UNSAFE";
}

StateSet satisfying_states(const TransitionSystem& system, const Expr& body) {
  switch (body.kind) {
    case Expr::Kind::Constant:
      return body.value ? StateSet::full(system.size()) : StateSet(system.size());
    case Expr::Kind::Atom: {
      const StateSet* label = system.label(body.atom);
      if (!label) throw PropertyMismatchError("unknown atomic proposition '" + body.atom + "'");
      return *label;
    }
    case Expr::Kind::Not:
      return satisfying_states(system, *body.operands[0]).complement();
    case Expr::Kind::And: {
      StateSet acc = satisfying_states(system, *body.operands[0]);
      for (std::size_t i = 1; i < body.operands.size(); ++i)
        acc &= satisfying_states(system, *body.operands[i]);
      return acc;
    }
    case Expr::Kind::Or: {
      StateSet acc = satisfying_states(system, *body.operands[0]);
      for (std::size_t i = 1; i < body.operands.size(); ++i)
        acc |= satisfying_states(system, *body.operands[i]);
      return acc;
    }
  }
  return StateSet(system.size());
}

StateSet bad_states(const TransitionSystem& system, const SafetyProperty& prop) {
  return satisfying_states(system, prop.body()).complement();
}

StateSet preimage(const TransitionSystem& system, const StateSet& y) {
  StateSet pre(system.size());
  if (y.universe() != system.size())
    throw std::invalid_argument("state set is not bound to this system");
  y.for_each([&](StateId s) {
    for (StateId p : system.predecessors(s)) pre.insert(p);
  });
  return pre;
}

SafetyVerdict check_safe(const TransitionSystem& system, const SafetyProperty& prop,
                         FixpointTrace* trace) {
  StateSet flagged = bad_states(system, prop);
  if (trace) trace->chain.assign(1, flagged);

  SafetyVerdict verdict;
  if (flagged.intersects(system.initial())) {
    verdict.value = SafetyVerdict::Value::Unsafe;
    verdict.states_flagged = flagged.count();
    return verdict;
  }

  std::vector<StateId> frontier = flagged.members();
  std::vector<StateId> added;
  std::size_t flagged_count = frontier.size();
  while (true) {
    added.clear();
    for (StateId s : frontier)
      for (StateId p : system.predecessors(s))
        if (flagged.insert(p)) added.push_back(p);
    // Y only grows, so no new member means Y_{i+1} == Y_i.
    if (added.empty()) break;
    flagged_count += added.size();
    ++verdict.iterations;
    if (trace) trace->chain.push_back(flagged);
    frontier.swap(added);
  }
  assert(verdict.iterations <= system.size());
  assert(flagged_count == flagged.count());

  verdict.states_flagged = flagged_count;
  verdict.value = flagged.intersects(system.initial()) ? SafetyVerdict::Value::Unsafe
                                                       : SafetyVerdict::Value::Safe;
  return verdict;
}

SafetyVerdict check_safe(const ClosedLoopSystem& system, const SafetyProperty& prop,
                         FixpointTrace* trace) {
  return check_safe(system.graph, prop, trace);
}

SafetyVerdict check_controller_alone(const ControllerFsm& fsm, const SafetyProperty& prop) {
  return check_safe(controller_graph(fsm), prop);
}

}  // namespace safevo
