#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace recjoint {

/// Parses the argument list (without the program name) and runs the selected
/// subcommand, writing results to out and diagnostics to err.  Returns the
/// process exit code: 0 on success, 1 when a verification check fails or a
/// run aborts, 2 on usage or validation errors.
int parse_and_dispatch(const std::vector<std::string>& args, std::ostream& out,
                       std::ostream& err);

} // namespace recjoint
