#pragma once

#include <iosfwd>

namespace mstd {

/// Exit codes of the command-line tool.
inline constexpr int exit_ok = 0;
inline constexpr int exit_failed = 1;
inline constexpr int exit_usage = 2;

/// Runs one `mstd` subcommand. argv[0] is the program name.
int cli_dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace mstd
