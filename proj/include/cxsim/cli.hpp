#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cxsim {

// Entry point of the `cxsim` command. `args` excludes the program name.
// Returns 0 on success, 1 on usage or parse errors, 2 on computation errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cxsim
