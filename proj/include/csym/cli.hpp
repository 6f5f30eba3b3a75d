#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace csym {

/// Runs one command line (without the program name). Returns the exit status:
/// 0 success, 1 usage, 2 validation, 3 internal inconsistency.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace csym
