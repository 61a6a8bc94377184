#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nmweyl {

/// Runs the command line (args excludes the program name). Returns 0 on
/// success, 1 when a computation or verification fails, 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nmweyl
