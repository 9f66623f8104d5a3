#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace holodisc {

/// Runs the command-line front end on already-split arguments (argv without
/// the program name). Writes results to `out` and diagnostics to `err`.
/// Exit codes: 0 success, 1 usage error, 2 validation error, 3 probe
/// inconclusive, 4 internal consistency failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace holodisc
