#include "safevo/fsm_text.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "safevo/errors.hpp"

namespace safevo {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::istringstream in{std::string(raw)};
    Line line{number, {}};
    for (std::string tok; in >> tok;) line.tokens.push_back(tok);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    pos = end + 1;
  }
  return lines;
}

[[noreturn]] void fail(const Line& line, const std::string& msg) {
  throw ParseError(line.number, "line " + std::to_string(line.number) + ": " + msg);
}

std::vector<std::string> names_from(const Line& line, std::size_t first) {
  std::vector<std::string> out(line.tokens.begin() + static_cast<std::ptrdiff_t>(first),
                               line.tokens.end());
  for (const auto& n : out)
    if (!is_identifier(n)) fail(line, "invalid name '" + n + "'");
  return out;
}

struct Declarations {
  const Line* header = nullptr;
  const Line* inputs = nullptr;
  const Line* outputs = nullptr;
  const Line* states = nullptr;
  const Line* initial = nullptr;
  std::vector<const Line*> emits, hazards, transitions;

  bool is_plant() const { return header->tokens[0] == "plant"; }
};

Declarations collect(const std::vector<Line>& lines) {
  if (lines.empty()) throw ParseError(1, "line 1: empty machine description");
  Declarations d;
  d.header = &lines.front();
  const Line& header = *d.header;
  if (header.tokens.size() != 2 || (header.tokens[0] != "fsm" && header.tokens[0] != "plant"))
    fail(header, "expected 'fsm <name>' or 'plant <name>'");
  if (!is_identifier(header.tokens[1])) fail(header, "invalid name '" + header.tokens[1] + "'");

  auto declare = [](const Line& l, const Line*& slot) {
    if (slot) fail(l, "duplicate '" + l.tokens[0] + "' declaration");
    slot = &l;
  };
  for (auto it = lines.begin() + 1; it != lines.end(); ++it) {
    const Line& l = *it;
    const std::string& key = l.tokens[0];
    if (key == "inputs:") declare(l, d.inputs);
    else if (key == "outputs:") declare(l, d.outputs);
    else if (key == "states:") declare(l, d.states);
    else if (key == "initial:") declare(l, d.initial);
    else if (key == "trans:") d.transitions.push_back(&l);
    else if (key == "emit:" || key == "hazard") {
      if (!d.is_plant()) fail(l, "'" + key + "' is only allowed in plant files");
      (key == "emit:" ? d.emits : d.hazards).push_back(&l);
    } else if (key == "fsm" || key == "plant") {
      fail(l, "second machine header");
    } else {
      fail(l, "unknown line kind '" + key + "'");
    }
  }
  const char* missing = !d.inputs    ? "inputs:"
                        : !d.outputs ? "outputs:"
                        : !d.states  ? "states:"
                        : !d.initial ? "initial:"
                                     : nullptr;
  if (missing) fail(header, std::string("missing '") + missing + "' declaration");
  return d;
}

std::uint32_t resolve(const Line& l, const std::vector<std::string>& names, const std::string& name,
                      const char* what) {
  auto idx = index_of(names, name);
  if (!idx) fail(l, std::string("undeclared ") + what + " '" + name + "'");
  return *idx;
}

ControllerFsm build_controller(const Declarations& d) {
  ControllerFsm m = ControllerFsm::blank(d.header->tokens[1], names_from(*d.inputs, 1),
                                         names_from(*d.outputs, 1), names_from(*d.states, 1));
  const auto initial = names_from(*d.initial, 1);
  if (initial.size() != 1) fail(*d.initial, "controller needs exactly one initial state");
  m.initial = resolve(*d.initial, m.states, initial.front(), "state");

  for (const Line* l : d.transitions) {
    const auto& t = l->tokens;
    if (t.size() != 7 || t[3] != "->" || t[5] != "/")
      fail(*l, "expected 'trans: <state> <input> -> <state> / <output>'");
    const StateId from = resolve(*l, m.states, t[1], "state");
    const SymbolId in = resolve(*l, m.inputs, t[2], "input");
    const StateId to = resolve(*l, m.states, t[4], "state");
    const SymbolId out = resolve(*l, m.outputs, t[6], "output");
    if (m.next_state(from, in) != kNoState)
      fail(*l, "duplicate transition for (" + t[1] + "," + t[2] + ")");
    m.set(from, in, to, out);
  }
  return m;
}

Plant build_plant(const Declarations& d) {
  Plant p = Plant::blank(d.header->tokens[1], names_from(*d.inputs, 1), names_from(*d.outputs, 1),
                         names_from(*d.states, 1));
  for (const auto& name : names_from(*d.initial, 1)) {
    const StateId s = resolve(*d.initial, p.states, name, "state");
    auto it = std::lower_bound(p.initial.begin(), p.initial.end(), s);
    if (it != p.initial.end() && *it == s) fail(*d.initial, "initial state '" + name + "' listed twice");
    p.initial.insert(it, s);
  }

  for (const Line* l : d.emits) {
    const auto& t = l->tokens;
    if (t.size() != 3) fail(*l, "expected 'emit: <state> <symbol>'");
    const StateId s = resolve(*l, p.states, t[1], "state");
    if (p.emit[s] != kNoSymbol) fail(*l, "second emit for state '" + t[1] + "'");
    p.emit[s] = resolve(*l, p.outputs, t[2], "output");
  }

  for (const Line* l : d.hazards) {
    const auto& t = l->tokens;
    if (t.size() < 2 || t[1].size() < 2 || t[1].back() != ':')
      fail(*l, "expected 'hazard <prop>: <state>...'");
    const std::string prop = t[1].substr(0, t[1].size() - 1);
    if (!is_identifier(prop) || prop == "true" || prop == "false")
      fail(*l, "invalid proposition name '" + prop + "'");
    auto& members = p.hazards[prop];
    for (const auto& name : names_from(*l, 2)) {
      const StateId s = resolve(*l, p.states, name, "state");
      auto it = std::lower_bound(members.begin(), members.end(), s);
      if (it == members.end() || *it != s) members.insert(it, s);
    }
  }

  for (const Line* l : d.transitions) {
    const auto& t = l->tokens;
    if (t.size() != 5 || t[3] != "->") fail(*l, "expected 'trans: <state> <input> -> <state>'");
    const StateId from = resolve(*l, p.states, t[1], "state");
    const SymbolId in = resolve(*l, p.inputs, t[2], "input");
    const StateId to = resolve(*l, p.states, t[4], "state");
    if (!p.add_transition(from, in, to))
      fail(*l, "duplicate transition " + t[1] + " " + t[2] + " -> " + t[4]);
  }
  return p;
}

void append_list(std::string& out, const char* key, const std::vector<std::string>& names) {
  out += key;
  for (const auto& n : names) {
    out += ' ';
    out += n;
  }
  out += '\n';
}

}  // namespace

bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(),
                     [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

Machine parse_fsm(std::string_view text) {
  const auto lines = tokenize(text);
  const Declarations d = collect(lines);
  if (d.is_plant()) return build_plant(d);
  return build_controller(d);
}

ControllerFsm parse_controller(std::string_view text) {
  Machine m = parse_fsm(text);
  if (auto* c = std::get_if<ControllerFsm>(&m)) return std::move(*c);
  throw ParseError(1, "line 1: expected a controller ('fsm'), found a plant");
}

Plant parse_plant(std::string_view text) {
  Machine m = parse_fsm(text);
  if (auto* p = std::get_if<Plant>(&m)) return std::move(*p);
  throw ParseError(1, "line 1: expected a plant, found a controller ('fsm')");
}

std::string serialize_fsm(const ControllerFsm& fsm) {
  std::string out = "fsm " + fsm.name + "\n";
  append_list(out, "inputs:", fsm.inputs);
  append_list(out, "outputs:", fsm.outputs);
  append_list(out, "states:", fsm.states);
  out += "initial: " + (fsm.initial < fsm.state_count() ? fsm.states[fsm.initial] : std::string()) + "\n";
  for (StateId s = 0; s < fsm.state_count(); ++s) {
    for (SymbolId a = 0; a < fsm.input_count(); ++a) {
      const StateId to = fsm.next_state(s, a);
      const SymbolId o = fsm.output(s, a);
      if (to == kNoState || o == kNoSymbol) continue;
      out += "trans: " + fsm.states[s] + " " + fsm.inputs[a] + " -> " + fsm.states[to] + " / " +
             fsm.outputs[o] + "\n";
    }
  }
  return out;
}

std::string serialize_fsm(const Plant& plant) {
  std::string out = "plant " + plant.name + "\n";
  append_list(out, "inputs:", plant.inputs);
  append_list(out, "outputs:", plant.outputs);
  append_list(out, "states:", plant.states);
  std::vector<std::string> initial;
  for (StateId s : plant.initial) initial.push_back(plant.states[s]);
  append_list(out, "initial:", initial);
  for (StateId s = 0; s < plant.state_count(); ++s)
    if (plant.emit[s] != kNoSymbol) out += "emit: " + plant.states[s] + " " + plant.outputs[plant.emit[s]] + "\n";
  for (const auto& [prop, members] : plant.hazards) {
    std::vector<std::string> names;
    for (StateId s : members) names.push_back(plant.states[s]);
    append_list(out, ("hazard " + prop + ":").c_str(), names);
  }
  for (StateId s = 0; s < plant.state_count(); ++s)
    for (SymbolId a = 0; a < plant.inputs.size(); ++a)
      for (StateId to : plant.next(s, a))
        out += "trans: " + plant.states[s] + " " + plant.inputs[a] + " -> " + plant.states[to] + "\n";
  return out;
}

std::string serialize_fsm(const Machine& machine) {
  return std::visit([](const auto& m) { return serialize_fsm(m); }, machine);
}

std::string canonicalize(std::string_view text) { return serialize_fsm(parse_fsm(text)); }

}  // namespace safevo
