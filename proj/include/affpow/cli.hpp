#pragma once

#include <iosfwd>

namespace affpow {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitFailure = 2;

/// Entry point of the affpow command. Returns 0 on a verified result, 2 on
/// a typed algorithmic failure and 1 on bad usage or unreadable input.
int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace affpow
