#pragma once

#include <vector>

#include "safevo/machine.hpp"
#include "safevo/transition_system.hpp"

namespace safevo {

// Symbol index translation between a controller and a plant whose alphabets
// match as sets.
struct Wiring {
  std::vector<SymbolId> sensor_to_input;     // plant output -> controller input
  std::vector<SymbolId> output_to_actuator;  // controller output -> plant input
};

// Throws CompositionError naming the missing / extra symbols.
Wiring wire(const ControllerFsm& controller, const Plant& plant);

struct ProductState {
  StateId controller;
  StateId plant;

  friend bool operator==(const ProductState&, const ProductState&) = default;
};

/// Reachable synchronous product of a controller and its plant.
///
/// One closed-loop step from (c, p): the plant shows its sensor symbol
/// sigma(p), the controller moves to next(c, sigma(p)) emitting actuator a, and
/// the plant moves to any successor of p under a. Propositions are the plant
/// hazard labels lifted to product states. States are numbered in BFS order
/// from the initial set.
struct ClosedLoopSystem {
  TransitionSystem graph;
  std::vector<ProductState> pairs;
};

// Throws CompositionError on alphabet mismatch and UsageError when either
// machine fails validation.
ClosedLoopSystem compose(const ControllerFsm& controller, const Plant& plant);

// The controller's own transition graph, existential over inputs. Output
// symbol `o` labels every state with at least one transition emitting `o`.
TransitionSystem controller_graph(const ControllerFsm& controller);

}  // namespace safevo
