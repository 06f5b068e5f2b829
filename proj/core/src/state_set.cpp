#include "safevo/state_set.hpp"

#include <stdexcept>
#include <string>

namespace safevo {

StateSet StateSet::full(std::size_t universe) {
  StateSet s(universe);
  s.bits_.set();
  return s;
}

StateSet StateSet::of(std::size_t universe, const std::vector<StateId>& members) {
  StateSet s(universe);
  for (StateId m : members) s.insert(m);
  return s;
}

bool StateSet::contains(StateId s) const {
  return s < bits_.size() && bits_.test(s);
}

bool StateSet::insert(StateId s) {
  if (s >= bits_.size())
    throw std::out_of_range("state " + std::to_string(s) + " outside set universe of " +
                            std::to_string(bits_.size()));
  if (bits_.test(s)) return false;
  bits_.set(s);
  return true;
}

void StateSet::erase(StateId s) {
  if (s < bits_.size()) bits_.reset(s);
}

void StateSet::require_same_universe(const StateSet& other) const {
  if (other.bits_.size() != bits_.size())
    throw std::invalid_argument("state sets bound to different systems (" +
                                std::to_string(bits_.size()) + " vs " +
                                std::to_string(other.bits_.size()) + " states)");
}

StateSet& StateSet::operator|=(const StateSet& other) {
  require_same_universe(other);
  bits_ |= other.bits_;
  return *this;
}

StateSet& StateSet::operator&=(const StateSet& other) {
  require_same_universe(other);
  bits_ &= other.bits_;
  return *this;
}

StateSet StateSet::complement() const {
  StateSet s = *this;
  s.bits_.flip();
  return s;
}

bool StateSet::intersects(const StateSet& other) const {
  require_same_universe(other);
  return bits_.intersects(other.bits_);
}

bool StateSet::is_subset_of(const StateSet& other) const {
  require_same_universe(other);
  return bits_.is_subset_of(other.bits_);
}

std::vector<StateId> StateSet::members() const {
  std::vector<StateId> out;
  out.reserve(count());
  for_each([&](StateId s) { out.push_back(s); });
  return out;
}

StateSet operator|(StateSet a, const StateSet& b) { return a |= b; }
StateSet operator&(StateSet a, const StateSet& b) { return a &= b; }

}  // namespace safevo
