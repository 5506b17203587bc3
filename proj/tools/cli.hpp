#pragma once

#include <iosfwd>

namespace pancake::cli {

inline constexpr int kExitUsage = 64;
inline constexpr int kExitIo = 74;

/// Runs one subcommand. Streams are parameters so tests can drive it.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace pancake::cli
