#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bskel::cli {

/// Runs the bskel command line with args (excluding the program name).
/// Data goes to out, diagnostics and progress to err. Returns the exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace bskel::cli
