#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "safevo/machine.hpp"

namespace safevo {

using Machine = std::variant<ControllerFsm, Plant>;

/// Line-oriented machine format. `#` starts a comment; blank lines are
/// ignored; declaration lines may appear in any order after the header.
///
///   fsm <name>                 | plant <name>
///   inputs: a b c
///   outputs: x y
///   states: s0 s1
///   initial: s0                | initial: s0 s1
///   emit: s0 a                   (plants: one per state)
///   hazard <prop>: s1            (plants: repeatable)
///   trans: s0 a -> s1 / x        (controllers)
///   trans: s0 x -> s1            (plants: repeatable = nondeterminism)
///
/// Throws ParseError carrying the 1-based line number. Incompleteness is not a
/// parse error; see validate_controller() / validate_plant().
Machine parse_fsm(std::string_view text);
ControllerFsm parse_controller(std::string_view text);
Plant parse_plant(std::string_view text);

// Canonical text: sections in the order above, emit lines in state order,
// hazards by name, transitions sorted by (state, input, target) index.
std::string serialize_fsm(const ControllerFsm& fsm);
std::string serialize_fsm(const Plant& plant);
std::string serialize_fsm(const Machine& machine);

std::string canonicalize(std::string_view text);

bool is_identifier(std::string_view s);

}  // namespace safevo
