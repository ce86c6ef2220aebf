#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace reactor {

/// Runs the command-line tool. `args` excludes the program name.
/// Returns the process exit code: 0 on success, 2 for usage errors (bad
/// flags, unknown scenario, bad parameter, malformed script), 1 for runtime
/// failures.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace reactor
