#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "safevo/config.hpp"
#include "safevo/machine.hpp"
#include "safevo/rng.hpp"

namespace safevo {

// Complete random machine with states s0..s{n-1}. Draw order: initial state,
// then (next state, output) for each (state, input) in row-major order.
ControllerFsm random_controller(Rng& rng, const std::vector<std::string>& inputs,
                                const std::vector<std::string>& outputs, std::size_t n_states,
                                std::string name = "genome");

struct MutationResult {
  ControllerFsm child;
  Mutation applied;
};

/// Applies exactly one mutation, drawn with probability proportional to its
/// weight among the modes applicable to `parent`:
///
///  - add_state     only below cfg.max_states; the new state gets a random row
///                  and one random existing transition is redirected to it
///  - delete_state  only with more than one state; transitions into the
///                  victim are retargeted uniformly among the survivors, as is
///                  the initial state if it was the victim
///  - change_transition, change_output, change_initial  always applicable
///
/// Falls back to change_transition when no applicable mode has positive
/// weight. States of the child are renamed s0..s{n-1}.
MutationResult mutate(const ControllerFsm& parent, Rng& rng, const EvolutionConfig& cfg);

// Modes mutate() may draw for a parent of `n_states` states.
std::vector<Mutation> applicable_mutations(std::size_t n_states, const EvolutionConfig& cfg);

}  // namespace safevo
