#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nikulin::cli {

/// Runs one command line (without the program name) and returns the exit
/// status. Results go to `out` (or to --out), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nikulin::cli
