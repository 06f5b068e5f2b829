#include "safevo/rng.hpp"

#include <stdexcept>

namespace safevo {

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t root, std::initializer_list<std::uint64_t> keys) noexcept {
  std::uint64_t h = splitmix64(root);
  for (std::uint64_t k : keys) h = splitmix64(h ^ k);
  return h;
}

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("Rng::below(0)");
  // 2^64 mod n; draws under it would bias the low residues.
  const std::uint64_t threshold = (0 - n) % n;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x < threshold);
  return x % n;
}

double Rng::unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

}  // namespace safevo
