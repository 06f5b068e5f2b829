#pragma once

// Independent reference computations for the test suites. Nothing here calls
// into the checker, composition, or simulation code it is used to verify;
// only the plain data types are shared.

#include <cstddef>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "safevo/machine.hpp"
#include "safevo/property.hpp"
#include "safevo/transition_system.hpp"

namespace safevo::testing {

// Truth of a boolean body at one state, given the set of atoms holding there.
bool holds(const Expr& body, const std::set<std::string>& atoms_true);

// Atoms true at `s` according to the system's labels.
std::set<std::string> atoms_at(const TransitionSystem& system, StateId s);

// Forward BFS from the initial states: safe iff no reachable state violates
// the body.
bool forward_reachability_safe(const TransitionSystem& system, const SafetyProperty& prop);

// Preimage by scanning every forward edge.
std::vector<bool> edge_scan_preimage(const TransitionSystem& system, const std::vector<bool>& y);

// Controller-alone check by enumerating every input word of length <= depth
// from the initial state. A state violates when the body is false under the
// set of outputs it can emit.
bool enumerated_controller_safe(const ControllerFsm& fsm, const SafetyProperty& prop, std::size_t depth);

struct ProductEdge {
  StateId controller_from, plant_from, controller_to, plant_to;
  auto operator<=>(const ProductEdge&) const = default;
};

// Closed-loop edges re-derived by name lookup, restricted to pairs reachable
// from the initial pairs.
std::set<ProductEdge> derive_product_edges(const ControllerFsm& controller, const Plant& plant,
                                           std::set<std::pair<StateId, StateId>>* reachable = nullptr);

// Depth-first walk of every disturbance resolution from every initial state,
// `depth` closed-loop steps deep. Calls visit(plant_state) for every state
// entered, initial states included.
void enumerate_disturbances(const ControllerFsm& controller, const Plant& plant, std::size_t depth,
                            const std::function<void(StateId)>& visit);

// Plant states carrying any of the given hazard labels.
std::vector<bool> hazard_states(const Plant& plant, const std::set<std::string>& labels);

}  // namespace safevo::testing
