#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "safevo/state_set.hpp"

namespace safevo {

using SymbolId = std::uint32_t;

inline constexpr StateId kNoState = std::numeric_limits<StateId>::max();
inline constexpr SymbolId kNoSymbol = std::numeric_limits<SymbolId>::max();

std::optional<std::uint32_t> index_of(const std::vector<std::string>& names, std::string_view name);

/// Deterministic Mealy machine encoding one control strategy.
///
/// Transition and emission tables are row-major over (state, input). A
/// machine under construction may hold kNoState / kNoSymbol holes; only
/// machines accepted by validate_controller() are complete.
struct ControllerFsm {
  std::string name;
  std::vector<std::string> inputs;
  std::vector<std::string> outputs;
  std::vector<std::string> states;
  StateId initial = kNoState;
  std::vector<StateId> next;
  std::vector<SymbolId> emit;

  // Machine with the given alphabets and states and every entry unset.
  static ControllerFsm blank(std::string name, std::vector<std::string> inputs,
                             std::vector<std::string> outputs, std::vector<std::string> states);

  std::size_t state_count() const noexcept { return states.size(); }
  std::size_t input_count() const noexcept { return inputs.size(); }
  std::size_t output_count() const noexcept { return outputs.size(); }

  std::size_t slot(StateId s, SymbolId input) const noexcept { return s * inputs.size() + input; }
  StateId next_state(StateId s, SymbolId input) const { return next[slot(s, input)]; }
  SymbolId output(StateId s, SymbolId input) const { return emit[slot(s, input)]; }
  void set(StateId s, SymbolId input, StateId to, SymbolId out) {
    next[slot(s, input)] = to;
    emit[slot(s, input)] = out;
  }

  friend bool operator==(const ControllerFsm&, const ControllerFsm&) = default;
};

/// Environment model: Moore-style sensing (one emitted symbol per state) and
/// possibly nondeterministic succession under each actuator symbol.
struct Plant {
  std::string name;
  std::vector<std::string> inputs;   // actuator symbols, i.e. controller outputs
  std::vector<std::string> outputs;  // sensor symbols, i.e. controller inputs
  std::vector<std::string> states;
  std::vector<StateId> initial;      // sorted, unique
  std::vector<SymbolId> emit;        // per state; kNoSymbol when undeclared
  std::map<std::string, std::vector<StateId>> hazards;  // sorted members
  std::vector<std::vector<StateId>> successors;         // per (state, input), sorted

  static Plant blank(std::string name, std::vector<std::string> inputs,
                     std::vector<std::string> outputs, std::vector<std::string> states);

  std::size_t state_count() const noexcept { return states.size(); }
  std::size_t slot(StateId s, SymbolId input) const noexcept { return s * inputs.size() + input; }

  std::span<const StateId> next(StateId s, SymbolId input) const { return successors[slot(s, input)]; }
  // Returns false if the edge was already present.
  bool add_transition(StateId from, SymbolId input, StateId to);

  friend bool operator==(const Plant&, const Plant&) = default;
};

struct ValidationReport {
  std::vector<std::string> violations;

  bool ok() const noexcept { return violations.empty(); }
};

ValidationReport validate_controller(const ControllerFsm& fsm);
ValidationReport validate_plant(const Plant& plant);

struct StepResult {
  StateId next_state;
  std::string output;

  friend bool operator==(const StepResult&, const StepResult&) = default;
};

// Throws UsageError for an unknown state or input symbol, or a missing entry.
StepResult step(const ControllerFsm& fsm, StateId state, std::string_view input);

}  // namespace safevo
