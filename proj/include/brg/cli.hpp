#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace brg::cli {

// Runs the command line given as argv[1..]; writes results to out and
// diagnostics to err. Returns 0 on success, 1 on input errors, 2 when a
// subset-enumeration cap was exceeded.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace brg::cli
