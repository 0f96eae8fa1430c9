#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace superweyl {

/// Parses the arguments (program name first), runs the command, writes the
/// report to --out or `out` and the summary to `err`. Returns 0 when every
/// check passes, 1 on a verification failure, 2 on a usage error.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace superweyl
