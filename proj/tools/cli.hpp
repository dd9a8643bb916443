#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace meshtree::cli {

// Runs one command. args[0] is the program name. Returns 0 on success, 1 on
// input or validation errors, 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace meshtree::cli
