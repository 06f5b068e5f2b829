#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace safevo {

// 64-bit FNV-1a; stable across platforms and runs.
std::uint64_t fnv1a64(std::string_view bytes) noexcept;
// 16 lowercase hex digits.
std::string hex_digest(std::string_view bytes);

}  // namespace safevo
