#include "safevo/transition_system.hpp"

#include <algorithm>
#include <stdexcept>

namespace safevo {

TransitionSystem::TransitionSystem(std::size_t state_count, const std::vector<StateId>& initial,
                                   std::vector<Edge> edges,
                                   const std::map<std::string, std::vector<StateId>>& labels)
    : state_count_(state_count), initial_(StateSet::of(state_count, initial)) {
  for (const auto& [from, to] : edges)
    if (from >= state_count || to >= state_count)
      throw std::out_of_range("edge endpoint outside transition system");

  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  succ_offsets_.assign(state_count + 1, 0);
  pred_offsets_.assign(state_count + 1, 0);
  for (const auto& [from, to] : edges) {
    ++succ_offsets_[from + 1];
    ++pred_offsets_[to + 1];
  }
  for (std::size_t i = 0; i < state_count; ++i) {
    succ_offsets_[i + 1] += succ_offsets_[i];
    pred_offsets_[i + 1] += pred_offsets_[i];
  }

  succ_targets_.resize(edges.size());
  pred_sources_.resize(edges.size());
  std::vector<std::size_t> succ_fill(succ_offsets_.begin(), succ_offsets_.end() - 1);
  std::vector<std::size_t> pred_fill(pred_offsets_.begin(), pred_offsets_.end() - 1);
  for (const auto& [from, to] : edges) {
    succ_targets_[succ_fill[from]++] = to;
    pred_sources_[pred_fill[to]++] = from;
  }

  for (const auto& [name, members] : labels) labels_.emplace(name, StateSet::of(state_count, members));
}

const StateSet* TransitionSystem::label(const std::string& name) const {
  auto it = labels_.find(name);
  return it == labels_.end() ? nullptr : &it->second;
}

}  // namespace safevo
