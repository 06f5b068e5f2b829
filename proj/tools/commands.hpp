#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace safevo::cli {

// Exit codes shared by every subcommand.
inline constexpr int kOk = 0;
inline constexpr int kUnsafe = 1;
inline constexpr int kError = 2;
inline constexpr int kNoSafeStrategy = 3;

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace safevo::cli
