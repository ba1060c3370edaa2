#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace simnitm::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitSolver = 2;
inline constexpr int kExitNotApplicable = 3;

/// Runs one command line (args excludes the program name). Results go to
/// files and `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Sweep worker count: SIMNITM_THREADS if set, else the hardware count.
unsigned sweep_threads();

}  // namespace simnitm::cli
