#pragma once

#include <cstddef>
#include <vector>

#include "safevo/compose.hpp"
#include "safevo/machine.hpp"
#include "safevo/property.hpp"
#include "safevo/state_set.hpp"
#include "safevo/transition_system.hpp"

namespace safevo {

/// Decision only: no path or witness is ever attached.
struct SafetyVerdict {
  enum class Value { Safe, Unsafe };

  Value value = Value::Safe;
  std::size_t iterations = 0;      // growth rounds until the fixpoint
  std::size_t states_flagged = 0;  // |Y| at termination

  bool safe() const noexcept { return value == Value::Safe; }
};

const char* to_string(SafetyVerdict::Value v) noexcept;

// Sequence of backward-closure sets Y_0, Y_1, ... recorded for inspection by
// tests and tooling. The verdict never depends on it.
struct FixpointTrace {
  std::vector<StateSet> chain;
};

// States where the property's boolean body is true. Throws
// PropertyMismatchError for an atom the system does not declare.
StateSet satisfying_states(const TransitionSystem& system, const Expr& body);

// Y_0: states violating the body of `prop`.
StateSet bad_states(const TransitionSystem& system, const SafetyProperty& prop);

// { s | some successor of s is in y }.
StateSet preimage(const TransitionSystem& system, const StateSet& y);

/// Backward-reachability safety check.
///
/// Grows Y_{i+1} = Pre(Y_i) | Y_i from Y_0 = bad_states() until nothing new is
/// added, and answers Safe iff the fixpoint misses every initial state. An
/// initial state already in Y_0 answers Unsafe with zero iterations. Each
/// round only expands the states added by the previous one, so the whole
/// fixpoint touches every reverse edge at most once.
SafetyVerdict check_safe(const TransitionSystem& system, const SafetyProperty& prop,
                         FixpointTrace* trace = nullptr);
SafetyVerdict check_safe(const ClosedLoopSystem& system, const SafetyProperty& prop,
                         FixpointTrace* trace = nullptr);

// Same fixpoint over controller_graph(fsm); atoms name output symbols.
SafetyVerdict check_controller_alone(const ControllerFsm& fsm, const SafetyProperty& prop);

}  // namespace safevo
