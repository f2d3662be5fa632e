#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hyperrec::cli {

// Runs one invocation; args excludes the program name. Returns the exit
// status: 0 ok, 1 domain error, 2 usage error.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hyperrec::cli
