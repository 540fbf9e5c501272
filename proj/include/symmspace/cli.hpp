#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace symmspace {

/// Runs the command line driver on already-split arguments (program name
/// excluded) and returns the process exit code: 0 on success, 1 when a
/// verification suite reports failures, 2 on usage or domain errors.  All
/// regular output goes to `out`, diagnostics to `err`.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace symmspace
