#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "safevo/state_set.hpp"

namespace safevo {

using Edge = std::pair<StateId, StateId>;

/// Immutable labeled transition system in compressed adjacency form. Both
/// forward and reverse adjacency are stored; the checker walks the reverse
/// lists.
class TransitionSystem {
public:
  TransitionSystem() = default;
  // Duplicate edges are dropped. Throws std::out_of_range on bad indices.
  TransitionSystem(std::size_t state_count, const std::vector<StateId>& initial,
                   std::vector<Edge> edges,
                   const std::map<std::string, std::vector<StateId>>& labels = {});

  std::size_t size() const noexcept { return state_count_; }
  std::size_t edge_count() const noexcept { return succ_targets_.size(); }
  const StateSet& initial() const noexcept { return initial_; }

  std::span<const StateId> successors(StateId s) const {
    return {succ_targets_.data() + succ_offsets_[s], succ_targets_.data() + succ_offsets_[s + 1]};
  }
  std::span<const StateId> predecessors(StateId s) const {
    return {pred_sources_.data() + pred_offsets_[s], pred_sources_.data() + pred_offsets_[s + 1]};
  }

  const std::map<std::string, StateSet>& labels() const noexcept { return labels_; }
  // nullptr when the proposition is not declared.
  const StateSet* label(const std::string& name) const;

private:
  std::size_t state_count_ = 0;
  StateSet initial_;
  std::vector<std::size_t> succ_offsets_{0};
  std::vector<StateId> succ_targets_;
  std::vector<std::size_t> pred_offsets_{0};
  std::vector<StateId> pred_sources_;
  std::map<std::string, StateSet> labels_;
};

}  // namespace safevo
