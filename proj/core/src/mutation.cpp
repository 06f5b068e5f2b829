#include "safevo/mutation.hpp"

#include "safevo/errors.hpp"

namespace safevo {

namespace {

void renumber(ControllerFsm& m) {
  for (std::size_t i = 0; i < m.states.size(); ++i) m.states[i] = "s" + std::to_string(i);
}

StateId draw_state(Rng& rng, std::size_t n) { return static_cast<StateId>(rng.below(n)); }

void add_state(ControllerFsm& m, Rng& rng) {
  const std::size_t n = m.state_count();
  const StateId fresh = static_cast<StateId>(n);
  m.states.push_back("s" + std::to_string(n));
  for (SymbolId a = 0; a < m.input_count(); ++a) {
    m.next.push_back(draw_state(rng, n + 1));
    m.emit.push_back(static_cast<SymbolId>(rng.below(m.output_count())));
  }
  m.next[rng.below(n * m.input_count())] = fresh;
}

void delete_state(ControllerFsm& m, Rng& rng) {
  const std::size_t n = m.state_count();
  const StateId victim = draw_state(rng, n);
  auto shift = [victim](StateId s) { return s > victim ? s - 1 : s; };

  std::vector<StateId> next;
  std::vector<SymbolId> emit;
  next.reserve((n - 1) * m.input_count());
  emit.reserve((n - 1) * m.input_count());
  for (StateId s = 0; s < n; ++s) {
    if (s == victim) continue;
    for (SymbolId a = 0; a < m.input_count(); ++a) {
      const StateId to = m.next_state(s, a);
      next.push_back(to == victim ? draw_state(rng, n - 1) : shift(to));
      emit.push_back(m.output(s, a));
    }
  }
  m.initial = m.initial == victim ? draw_state(rng, n - 1) : shift(m.initial);
  m.states.pop_back();
  m.next = std::move(next);
  m.emit = std::move(emit);
}

}  // namespace

ControllerFsm random_controller(Rng& rng, const std::vector<std::string>& inputs,
                                const std::vector<std::string>& outputs, std::size_t n_states,
                                std::string name) {
  if (n_states == 0) throw UsageError("random_controller needs at least one state");
  if (inputs.empty() || outputs.empty()) throw UsageError("random_controller needs non-empty alphabets");
  ControllerFsm m = ControllerFsm::blank(std::move(name), inputs, outputs,
                                         std::vector<std::string>(n_states));
  renumber(m);
  m.initial = draw_state(rng, n_states);
  for (StateId s = 0; s < n_states; ++s)
    for (SymbolId a = 0; a < m.input_count(); ++a)
      m.set(s, a, draw_state(rng, n_states), static_cast<SymbolId>(rng.below(m.output_count())));
  return m;
}

std::vector<Mutation> applicable_mutations(std::size_t n_states, const EvolutionConfig& cfg) {
  std::vector<Mutation> out;
  for (Mutation m : kAllMutations) {
    if (m == Mutation::AddState && n_states >= cfg.max_states) continue;
    if (m == Mutation::DeleteState && n_states <= 1) continue;
    out.push_back(m);
  }
  return out;
}

MutationResult mutate(const ControllerFsm& parent, Rng& rng, const EvolutionConfig& cfg) {
  const auto modes = applicable_mutations(parent.state_count(), cfg);
  double total = 0.0;
  for (Mutation m : modes) total += cfg.mutation_weights[m];

  Mutation chosen = Mutation::ChangeTransition;
  if (total > 0.0) {
    double r = rng.unit() * total;
    chosen = modes.back();
    for (Mutation m : modes) {
      const double w = cfg.mutation_weights[m];
      if (w > 0.0 && r < w) {
        chosen = m;
        break;
      }
      r -= w;
    }
    // Rounding can leave r past the last bucket; take the last positive one.
    if (cfg.mutation_weights[chosen] <= 0.0)
      for (Mutation m : modes)
        if (cfg.mutation_weights[m] > 0.0) chosen = m;
  }

  ControllerFsm child = parent;
  const std::size_t n = child.state_count();
  const std::size_t cells = n * child.input_count();
  switch (chosen) {
    case Mutation::AddState:
      add_state(child, rng);
      break;
    case Mutation::DeleteState:
      delete_state(child, rng);
      break;
    case Mutation::ChangeTransition:
      child.next[rng.below(cells)] = draw_state(rng, n);
      break;
    case Mutation::ChangeOutput:
      child.emit[rng.below(cells)] = static_cast<SymbolId>(rng.below(child.output_count()));
      break;
    case Mutation::ChangeInitial:
      child.initial = draw_state(rng, n);
      break;
  }
  renumber(child);
  return {std::move(child), chosen};
}

}  // namespace safevo
