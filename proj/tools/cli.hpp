#pragma once

#include <ostream>

namespace hyp2::cli {

// Exit codes: 0 all checks passed, 1 a check failed, 2 bad input or usage.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitParseError = 2;

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hyp2::cli
