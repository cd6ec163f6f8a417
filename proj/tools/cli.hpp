#pragma once

#include <ostream>

namespace cuckooseg::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitDegenerate = 2;

/// Entry point for `cuckooseg segment|oracle|metrics`. Output goes to the
/// given streams so tests can run commands in-process.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cuckooseg::cli
