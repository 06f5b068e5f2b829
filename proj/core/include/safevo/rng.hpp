#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace safevo {

std::uint64_t splitmix64(std::uint64_t x) noexcept;

// Independent stream seed for a key path under a root seed, e.g.
// derive_seed(root, {generation, parent, child, purpose}).
std::uint64_t derive_seed(std::uint64_t root, std::initializer_list<std::uint64_t> keys) noexcept;

/// Seeded stream with platform-independent draws: 64-bit Mersenne Twister
/// output mapped to ranges by rejection sampling rather than through
/// std::uniform_int_distribution, whose algorithm is unspecified.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  // Uniform in [0, n). n must be positive.
  std::uint64_t below(std::uint64_t n);
  // Uniform in [0, 1) with 53 bits of precision.
  double unit();

private:
  std::mt19937_64 engine_;
};

}  // namespace safevo
