#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace safevo {

using StateId = std::uint32_t;

/// Dense set of state indices for one transition system.
///
/// All binary operations require both operands to span the same index range
/// and throw std::invalid_argument otherwise.
class StateSet {
public:
  StateSet() = default;
  explicit StateSet(std::size_t universe) : bits_(universe) {}

  static StateSet full(std::size_t universe);
  static StateSet of(std::size_t universe, const std::vector<StateId>& members);

  std::size_t universe() const noexcept { return bits_.size(); }
  std::size_t count() const noexcept { return bits_.count(); }
  bool empty() const noexcept { return bits_.none(); }

  bool contains(StateId s) const;
  // Returns true if `s` was not yet a member.
  bool insert(StateId s);
  void erase(StateId s);

  StateSet& operator|=(const StateSet& other);
  StateSet& operator&=(const StateSet& other);
  StateSet complement() const;
  bool intersects(const StateSet& other) const;
  bool is_subset_of(const StateSet& other) const;

  std::vector<StateId> members() const;

  template <typename F>
  void for_each(F&& f) const {
    for (auto i = bits_.find_first(); i != Bits::npos; i = bits_.find_next(i))
      f(static_cast<StateId>(i));
  }

  friend bool operator==(const StateSet& a, const StateSet& b) { return a.bits_ == b.bits_; }

private:
  using Bits = boost::dynamic_bitset<std::uint64_t>;
  void require_same_universe(const StateSet& other) const;

  Bits bits_;
};

StateSet operator|(StateSet a, const StateSet& b);
StateSet operator&(StateSet a, const StateSet& b);

}  // namespace safevo
