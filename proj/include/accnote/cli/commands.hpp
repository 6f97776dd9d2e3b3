#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace accnote::cli {

inline constexpr int kExitOk = 0;
/// Some entries failed; the output file is still complete.
inline constexpr int kExitPartial = 1;
inline constexpr int kExitUsage = 2;

/// Parses `args` (args[0] is the program name) and dispatches to one of the
/// subcommands: run, eval-detect, eval-notes, correlate, score-note,
/// inspect-trace. Reports go to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace accnote::cli
