#pragma once

#include <iosfwd>

namespace qf::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  ///< verification or convergence failure
inline constexpr int kExitUsage = 2;

/// Entry point of the `qfaulhaber` command line tool. Writes results to `out`
/// and diagnostics to `err`; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qf::cli
